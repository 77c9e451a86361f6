"""p-expressions, p-cones and every named weight cone of a stratum context.

A context is ``(n, R, S, p)`` with ``R`` the parabolic type and ``S`` the
stratum.  ``p`` is an integer >= 2 for anything polyhedral; the symbolic
indeterminate :data:`strata_cones.ppoly.P` is accepted wherever only
coefficients are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .cyclic import (
    EmptyStratumError,
    IndexSet,
    Weight,
    chain_diagram,
    is_admissible_subset,
    is_positive_at,
    phi,
    reduce,
    sigma_shift,
)
from .intlinalg import dot, rank, saturate
from .polycone import ConeError, PolyCone, equals, is_subcone, product

from .ppoly import PPoly

PValue = Union[int, PPoly]


def _check_p(p) -> PValue:
    if isinstance(p, PPoly):
        return p
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be an integer >= 2 or symbolic, got {p!r}")
    return p


def _concrete(p: PValue) -> int:
    if isinstance(p, PPoly):
        raise ConeError("polyhedral operations need a concrete p")
    return p


@dataclass(frozen=True)
class StratumContext:
    n: int
    R: IndexSet
    S: IndexSet
    p: PValue

    def __post_init__(self):
        _check_p(self.p)
        if self.R.n != self.n or self.S.n != self.n:
            raise ValueError("R and S must live in E_n")

    @classmethod
    def make(cls, n: int, R=(), S=(), p: PValue = 2) -> "StratumContext":
        R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
        S = S if isinstance(S, IndexSet) else IndexSet.of(n, S)
        return cls(n, R, S, p)

    def with_S(self, S) -> "StratumContext":
        S = S if isinstance(S, IndexSet) else IndexSet.of(self.n, S)
        return StratumContext(self.n, self.R, S, self.p)

    def with_p(self, p: PValue) -> "StratumContext":
        return StratumContext(self.n, self.R, self.S, p)

    def require_stratum(self) -> None:
        if not self.S:
            raise EmptyStratumError()

    def __str__(self) -> str:
        return f"n={self.n} R={{{self.R}}} S={{{self.S}}} p={self.p}"


# -- p-expressions ------------------------------------------------------------

@dataclass(frozen=True)
class PExpression:
    """F^{(d)}_T(x) = sum_i p^i δ_T^{(d+i)} x_{d+i}."""

    d: int
    T: IndexSet
    n: int
    p: PValue

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise ValueError(f"starting index {self.d} outside 1..{self.n}")

    def coefficients(self) -> tuple:
        """Coefficients of x_1, ..., x_n."""
        out = [0] * self.n
        for i in range(self.n):
            j = reduce(self.d + i, self.n)
            out[j - 1] = self.T.delta(j) * self.p ** i
        return tuple(out)

    def vector(self) -> tuple[int, ...]:
        _concrete(self.p)
        return self.coefficients()

    def evaluate(self, x: Sequence[int]):
        if len(x) != self.n:
            raise ValueError(f"weight of length {len(x)} for n={self.n}")
        return sum((c * v for c, v in zip(self.coefficients(), x)), 0)

    @property
    def leading_index(self) -> int:
        return reduce(self.d - 1, self.n)

    def text(self) -> str:
        """Human form in the order x_1, ..., x_n."""
        parts = []
        for j in range(1, self.n + 1):
            i = (j - self.d) % self.n
            sign = "-" if j in self.T else "+"
            if isinstance(self.p, PPoly):
                coef = "" if i == 0 else ("p" if i == 1 else f"p^{i}")
            else:
                c = self.p ** i
                coef = "" if c == 1 else str(c)
            parts.append((sign, f"{coef}x{j}"))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out + " <= 0"


def p_expression(d: int, T, n: int, p: PValue) -> PExpression:
    T = T if isinstance(T, IndexSet) else IndexSet.of(n, T)
    return PExpression(reduce(d, n), T, n, _check_p(p))


def evaluate(expr: PExpression, x: Sequence[int]):
    return expr.evaluate(x)


@dataclass(frozen=True)
class PCone:
    context: StratumContext
    expressions: tuple[PExpression, ...]

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def starting_indices(self) -> tuple[int, ...]:
        return tuple(sorted(e.d for e in self.expressions))

    @property
    def sign_sets(self) -> tuple[IndexSet, ...]:
        return tuple(e.T for e in self.expressions)

    def hrep(self) -> list[tuple[int, ...]]:
        return [e.vector() for e in self.expressions]

    @property
    def realized(self) -> PolyCone:
        return _realize(self)

    def text(self) -> str:
        return "\n".join(e.text() for e in self.expressions)


@lru_cache(maxsize=None)
def _realize(c: PCone) -> PolyCone:
    return PolyCone(c.n, hrep=c.hrep())


@sigma_shift.register
def _(obj: PCone, t: int = 1, n: int | None = None) -> PCone:
    ctx = obj.context
    new_ctx = StratumContext(ctx.n, sigma_shift(ctx.R, t), sigma_shift(ctx.S, t), ctx.p)
    exprs = tuple(
        PExpression(reduce(e.d + t, e.n), sigma_shift(e.T, t), e.n, e.p) for e in obj.expressions
    )
    return PCone(new_ctx, exprs)


@sigma_shift.register
def _(obj: PolyCone, t: int = 1, n: int | None = None) -> PolyCone:
    def sh(v):
        return sigma_shift(tuple(v), t)
    if obj.has_vrep:
        return PolyCone(obj.n, hrep=[sh(f) for f in obj.hrep] if obj.has_hrep else None,
                        rays=[sh(r) for r in obj.rays],
                        lineality=[sh(v) for v in obj.lineality_generators])
    return PolyCone(obj.n, hrep=[sh(f) for f in obj.hrep])


# -- partial Hasse weights ----------------------------------------------------

def _predecessor(i: int, n: int, blocks: Sequence[int] | None) -> int:
    """i-1 cyclically, or within its consecutive block when ``blocks`` is given."""
    if blocks is None:
        return reduce(i - 1, n)
    start = 1
    for m in blocks:
        if start <= i < start + m:
            return start + m - 1 if i == start else i - 1
        start += m
    raise ValueError(f"index {i} outside the blocks {tuple(blocks)}")


def ha_weight(i: int, ctx: StratumContext, blocks: Sequence[int] | None = None) -> Weight:
    """h_w(e_i) = -δ_S^{(i)} e_i - p δ_R^{(i-1)} e_{i-1}.

    The sign of e_i is +1 exactly at stratum indices.  With ``blocks`` the
    predecessor is taken inside each consecutive coordinate block.
    """
    n, p = ctx.n, ctx.p
    i = reduce(i, n)
    j = _predecessor(i, n, blocks)
    v = [0] * n
    v[i - 1] += -ctx.S.delta(i)
    v[j - 1] += -p * ctx.R.delta(j)
    return tuple(v)


def kernel_KS(ctx: StratumContext, blocks: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Saturated span of the ha weights at non-stratum indices (HNF basis)."""
    _concrete(ctx.p)
    rows = [ha_weight(j, ctx, blocks) for j in range(1, ctx.n + 1) if j not in ctx.S]
    return saturate(rows, ctx.n)


def cone_pha_generators(ctx: StratumContext, blocks: Sequence[int] | None = None) -> PolyCone:
    """Saturation of N·ha^{(i)} (i ∈ S) + Z·ha^{(j)} (j ∉ S); V-representation only."""
    ctx.require_stratum()
    _concrete(ctx.p)
    rays = [ha_weight(i, ctx, blocks) for i in ctx.S]
    return PolyCone(ctx.n, rays=rays, lineality=kernel_KS(ctx, blocks))


def j_product(x: Sequence, i: int, j: int, n: int):
    """J_{i,j}(x): 1 if i ≡ j+1 (mod n), else x_i x_{i+1} ... x_{j'}."""
    if (i - j - 1) % n == 0:
        return 1
    jp = i + (j - i) % n
    out = 1
    for k in range(i, jp + 1):
        out = out * x[reduce(k, n) - 1]
    return out


def adjugate_j(a: Sequence, b: Sequence) -> list[list]:
    """Adjugate of the cyclic bidiagonal matrix M(a, b) by the closed J-product formula."""
    n = len(a)
    return [
        [j_product(a, j + 1, i - 1, n) * j_product(b, i, j - 1, n) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def cyclic_matrix(a: Sequence, b: Sequence) -> list[list]:
    """M(a, b): a on the diagonal, -b_i at (i, i+1), -b_n at (n, 1)."""
    n = len(a)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = m[i][i] + a[i]
        m[i][(i + 1) % n] = m[i][(i + 1) % n] - b[i]
    return m


def hasse_matrix_entries(ctx: StratumContext) -> tuple[list, list]:
    """The tuples (a, b) with M(a, b) the matrix of h_w: a = -δ_S, b = p δ_R."""
    a = [-ctx.S.delta(i) for i in range(1, ctx.n + 1)]
    b = [ctx.p * ctx.R.delta(i) for i in range(1, ctx.n + 1)]
    return a, b


def hasse_determinant(ctx: StratumContext):
    """det M(-δ_S, pδ_R) = prod(a) - prod(b)."""
    a, b = hasse_matrix_entries(ctx)
    pa, pb = 1, 1
    for x in a:
        pa = pa * x
    for x in b:
        pb = pb * x
    return pa - pb


def _sign(c) -> int:
    if isinstance(c, PPoly):
        return (c.coeffs[-1] > 0) - (c.coeffs[-1] < 0) if c else 0
    return (c > 0) - (c < 0)


def cone_pha_adjugate(ctx: StratumContext) -> PCone:
    """C_pHa as an S-adapted p-cone read off the adjugate of M(-δ_S, pδ_R).

    Row i of the adjugate pairs to det·δ_ij with the columns ha^{(j)}, so the
    normal at i ∈ S is -sign(det)·Adj_i; for p >= 2 this is (-1)^{|R|}·Adj_i.
    """
    ctx.require_stratum()
    n = ctx.n
    a, b = hasse_matrix_entries(ctx)
    adj = adjugate_j(a, b)
    flip = -_sign(hasse_determinant(ctx))
    exprs = []
    for i in ctx.S:
        row = [flip * c for c in adj[i - 1]]
        T = IndexSet(n, frozenset(j for j in range(1, n + 1) if _sign(row[j - 1]) < 0))
        expr = PExpression(i, T, n, ctx.p)
        if tuple(expr.coefficients()) != tuple(row):
            raise ConeError(f"adjugate row {i} is not a p-expression starting at {i}: {row}")
        exprs.append(expr)
    return PCone(ctx, tuple(exprs))


class PhaMismatchError(ConeError):
    def __init__(self, ctx: StratumContext, generator_hrep, adjugate_hrep):
        self.ctx = ctx
        self.generator_hrep = generator_hrep
        self.adjugate_hrep = adjugate_hrep
        super().__init__(
            f"C_pHa constructions disagree at {ctx}: generator form {list(generator_hrep)} "
            f"vs adjugate form {list(adjugate_hrep)}"
        )


@lru_cache(maxsize=None)
def cone_pha(ctx: StratumContext) -> PolyCone:
    """C_pHa with both representations, after cross-checking the two constructions."""
    gen = cone_pha_generators(ctx)
    adj = cone_pha_adjugate(ctx).realized
    if not (is_subcone(gen, adj)[0] and is_subcone(adj, gen)[0]):
        raise PhaMismatchError(ctx, gen.hrep, adj.hrep)
    return PolyCone(ctx.n, hrep=adj.hrep, rays=gen.rays, lineality=gen.lineality_generators)


# -- the homogeneous cones C_{R,S} --------------------------------------------

def cone_crs(ctx: StratumContext) -> PCone:
    """F^{(i)}_{Φ(S)}(x) <= 0 for i ∈ S."""
    ctx.require_stratum()
    T = phi(ctx.n, ctx.R, ctx.S)
    return PCone(ctx, tuple(PExpression(i, T, ctx.n, ctx.p) for i in ctx.S))


def gen_weight(i: int, ctx: StratumContext) -> Weight:
    """gen^{(i)} = δ_T^{(i)} e_i - p δ_R^{(i-1)} e_{i-1}, T = Φ(S)."""
    if i not in ctx.S:
        raise ValueError(f"{i} is not in the stratum")
    n = ctx.n
    i = reduce(i, n)
    T = phi(n, ctx.R, ctx.S)
    v = [0] * n
    v[i - 1] += T.delta(i)
    v[reduce(i - 1, n) - 1] += -ctx.p * ctx.R.delta(i - 1)
    return tuple(v)


@dataclass(frozen=True)
class PConeFlags:
    s_adapted: bool
    homogeneous: bool
    admissible: bool
    positive: bool
    hasse_admissible: bool


def classify_pcone(c: PCone) -> PConeFlags:
    ctx = c.context
    starts = sorted(e.d for e in c.expressions)
    s_adapted = starts == sorted(ctx.S)
    homogeneous = len({e.T for e in c.expressions}) <= 1
    diagram = chain_diagram(ctx.n, ctx.R, ctx.S)
    admissible = all(is_admissible_subset(e.T, diagram) for e in c.expressions)
    positive = all(is_positive_at(e.T, e.d, ctx.R) for e in c.expressions)
    hasse = admissible and all(
        is_positive_at(e.T, j, ctx.R) for e in c.expressions for j in ctx.S if j not in e.T
    )
    return PConeFlags(s_adapted, homogeneous, admissible, positive, hasse)


def forms_independent(c: PCone) -> bool:
    return rank(c.hrep()) == len(c.expressions)


# -- limit, Griffiths-Schmid and dominance cones --------------------------------

def _axis(n: int, i: int, s: int) -> tuple[int, ...]:
    v = [0] * n
    v[i - 1] = s
    return tuple(v)


def limit_cone(c: PCone) -> PolyCone:
    """ε_{d-1} x_{d-1} <= 0 for each expression (the dominant term only)."""
    n = c.n
    forms = [_axis(n, e.leading_index, e.T.delta(e.leading_index)) for e in c.expressions]
    return PolyCone(n, hrep=forms)


def cone_gs(n: int, R) -> PolyCone:
    """Closed Griffiths-Schmid cone: x_i >= 0 on R, x_i <= 0 off R."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    forms = [_axis(n, i, -1 if i in R else 1) for i in range(1, n + 1)]
    return PolyCone(n, hrep=forms, rays=[_axis(n, i, 1 if i in R else -1) for i in range(1, n + 1)],
                    lineality=())


def strict_member(x: Sequence[int], n: int, R) -> bool:
    """Open Griffiths-Schmid condition: x_i > 0 on R, x_i < 0 off R."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    if len(x) != n:
        raise ValueError(f"weight of length {len(x)} for n={n}")
    return all((x[i - 1] > 0) if i in R else (x[i - 1] < 0) for i in range(1, n + 1))


def cone_dominant(n: int, R) -> PolyCone:
    """x_i >= 0 for i ∈ R."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    return PolyCone(n, hrep=[_axis(n, i, -1) for i in R])


# -- the maximal stratum and the lowest-weight cone -----------------------------

def lambda_generators(n: int, R, p: PValue) -> list[Weight]:
    """The n weights λ^{(i)}_k generating C_{E_n} ∩ dominant."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    rs = [i for i in range(1, n + 1) if i not in R]
    if not rs:
        raise ValueError("no non-compact index")
    out = []
    for idx, r in enumerate(rs):
        prev = rs[idx - 1]
        g = (r - prev) % n or n
        for k in range(1, g + 1):
            v = [0] * n
            v[r - 1] += 1
            if k < g:
                v[reduce(r - k, n) - 1] += p ** k
            else:
                v[prev - 1] += -(p ** g)
            out.append(tuple(v))
    return out


def minv_coords(x: Sequence[int], n: int, R, p: int) -> list[Fraction]:
    """y_i = x_i on R, y_i = -F^{(i+1)}_R(x) / (p(p^n - 1)) off R."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    scale = p * (p ** n - 1)
    y = []
    for i in range(1, n + 1):
        if i in R:
            y.append(Fraction(x[i - 1]))
        else:
            y.append(Fraction(-PExpression(reduce(i + 1, n), R, n, p).evaluate(x), scale))
    return y


def cone_lw(n: int, R, p: int) -> PolyCone:
    """Lowest-weight cone of the A1 case, written out directly from its inequalities."""
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    _concrete(p)
    dom = [_axis(n, i, -1) for i in R]
    if len(R) == n:
        return PolyCone(n, hrep=dom)
    forms = []
    for j in range(1, n + 1):
        f = [0] * n
        for i in range(n):
            k = reduce(i + j, n)
            f[k - 1] = p ** i * (-1 if k in R else 1)
        forms.append(tuple(f))
    return PolyCone(n, hrep=forms + dom)


# -- products --------------------------------------------------------------------

def _block_ranges(parts: Sequence[int]) -> list[range]:
    out, start = [], 1
    for m in parts:
        out.append(range(start, start + m))
        start += m
    return out


def product_decompose(parts: Sequence[int], R, S, p: PValue) -> list[StratumContext]:
    """Split a context on consecutive blocks of the given sizes into factor contexts."""
    parts = tuple(parts)
    if not parts or any(m < 1 for m in parts):
        raise ValueError(f"invalid block sizes {parts}")
    n = sum(parts)
    R = R if isinstance(R, IndexSet) else IndexSet.of(n, R)
    S = S if isinstance(S, IndexSet) else IndexSet.of(n, S)
    if R.n != n or S.n != n:
        raise ValueError("block sizes do not add up to n")
    out = []
    for k, block in enumerate(_block_ranges(parts), start=1):
        off = block.start - 1
        Sk = [i - off for i in S.members if i in block]
        if not Sk:
            raise EmptyStratumError(
                f"empty factor stratum in block {k} (indices {block.start}..{block.stop - 1})"
            )
        Rk = [i - off for i in R.members if i in block]
        out.append(StratumContext.make(len(block), Rk, Sk, p))
    return out


def product_cone(cones: Sequence[PolyCone]) -> PolyCone:
    return product(cones)
