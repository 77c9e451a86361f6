"""Cyclic index algebra on E_n = {1, ..., n}, chain diagrams and the sign-set map.

Indices are always 1-based representatives; every shift goes through
:func:`reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, singledispatch
from typing import Iterable, Iterator, Literal

Weight = tuple[int, ...]

DOTTED = "dotted"
PLAIN = "plain"


class EmptyStratumError(ValueError):
    def __init__(self, what: str = "empty stratum"):
        super().__init__(what)


def reduce(k: int, n: int) -> int:
    """The representative of ``k`` modulo ``n`` in ``{1, ..., n}``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return (k - 1) % n + 1


@dataclass(frozen=True, order=True)
class IndexSet:
    """A subset of E_n.  Iterates in ascending order."""

    n: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(int(m) for m in self.members)
        bad = [m for m in members if not 1 <= m <= self.n]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside 1..{self.n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "IndexSet":
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(n, frozenset(range(1, n + 1)))

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and reduce(i, self.n) in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def delta(self, i: int) -> int:
        """-1 at members, +1 elsewhere (index taken mod n)."""
        return -1 if i in self else 1

    def delta_vector(self) -> tuple[int, ...]:
        return tuple(self.delta(i) for i in range(1, self.n + 1))

    def complement(self) -> "IndexSet":
        return IndexSet(self.n, frozenset(range(1, self.n + 1)) - self.members)

    def without(self, j: int) -> "IndexSet":
        return IndexSet(self.n, self.members - {reduce(j, self.n)})

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __str__(self) -> str:
        return ",".join(str(m) for m in self)


def _as_set(obj, n: int) -> IndexSet:
    if isinstance(obj, IndexSet):
        if obj.n != n:
            raise ValueError(f"index set lives in E_{obj.n}, expected E_{n}")
        return obj
    return IndexSet.of(n, obj)


def all_subsets(n: int) -> Iterator[IndexSet]:
    """Every subset of E_n, in bitmask order."""
    for mask in range(1 << n):
        yield IndexSet(n, frozenset(i + 1 for i in range(n) if mask >> i & 1))


Kind = Literal["closed", "open-left", "open-right", "open"]


def interval(x: int, y: int, n: int, kind: Kind = "closed") -> IndexSet:
    """Cyclic interval from ``x`` walking forward to ``y``.

    ``closed`` is [x,y]; ``open-left`` drops x, ``open-right`` drops y and
    ``open`` drops both (when x == y the walk is the single point x).
    """
    x, y = reduce(x, n), reduce(y, n)
    walk = [x]
    while walk[-1] != y:
        walk.append(reduce(walk[-1] + 1, n))
    members = set(walk)
    if kind in ("open-left", "open"):
        members.discard(x)
    if kind in ("open-right", "open"):
        members.discard(y)
    if kind not in ("closed", "open-left", "open-right", "open"):
        raise ValueError(f"unknown interval kind {kind!r}")
    return IndexSet(n, frozenset(members))


def follows(x: int, S: IndexSet) -> int:
    """First element of ``S`` met in x+1, x+2, ... (``x`` itself if |S| = 1)."""
    if not S:
        raise EmptyStratumError()
    for step in range(1, S.n + 1):
        y = reduce(x + step, S.n)
        if y in S:
            return y
    raise AssertionError("unreachable")


def gamma(s: int, S: IndexSet) -> int:
    """Smallest positive g with ``s - g`` in ``S``."""
    if s not in S:
        raise ValueError(f"{s} is not in the stratum {set(S)}")
    for g in range(1, S.n + 1):
        if (s - g) in S:
            return g
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]  # walk order, tail first

    @property
    def tail(self) -> int:
        return self.vertices[0]

    @property
    def head(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ChainDiagram:
    n: int
    R: IndexSet
    S: IndexSet
    edges: tuple[tuple[int, int, str], ...]
    components: tuple[Component, ...]

    @property
    def heads(self) -> frozenset[int]:
        return frozenset(c.head for c in self.components)

    @property
    def tails(self) -> frozenset[int]:
        return frozenset(c.tail for c in self.components)

    def component_of(self, v: int) -> Component:
        v = reduce(v, self.n)
        for c in self.components:
            if v in c.vertices:
                return c
        raise AssertionError("vertex not covered")


def chain_diagram(n: int, R, S) -> ChainDiagram:
    """The diagram Γ_n(R, S).

    Edge (i, i+1) exists iff i+1 is not in S; it is plain when i is in R and
    dotted otherwise.  Each component is a path from its tail (the unique
    stratum element in it) to its head; for |S| = 1 the head is s-1.
    """
    R, S = _as_set(R, n), _as_set(S, n)
    if not S:
        raise EmptyStratumError()
    edges = []
    for i in range(1, n + 1):
        j = reduce(i + 1, n)
        if j not in S:
            edges.append((i, j, PLAIN if i in R else DOTTED))
    components = []
    for s in S:
        walk = [s]
        while reduce(walk[-1] + 1, n) not in S:
            walk.append(reduce(walk[-1] + 1, n))
        components.append(Component(tuple(walk)))
    return ChainDiagram(n, R, S, tuple(edges), tuple(components))


def is_admissible_subset(T, diagram: ChainDiagram) -> bool:
    """Dotted edges split across T, plain edges stay on one side."""
    T = _as_set(T, diagram.n)
    for i, j, kind in diagram.edges:
        same = (i in T) == (j in T)
        if kind == DOTTED and same:
            return False
        if kind == PLAIN and not same:
            return False
    return True


def is_positive_at(T, i: int, R) -> bool:
    """``T`` is i-positive: i-1 ∈ T exactly when i-1 ∈ R."""
    return ((i - 1) in T) == ((i - 1) in R)


@lru_cache(maxsize=None)
def _phi_cached(n: int, R: IndexSet, S: IndexSet) -> IndexSet:
    diagram = chain_diagram(n, R, S)
    members = set()
    for comp in diagram.components:
        # anchor the head by positivity of the next stratum element, then
        # walk back to the tail flipping across dotted edges
        inside = comp.head in R
        for v in reversed(comp.vertices):
            if v != comp.head:
                inside = inside if v in R else not inside
            if inside:
                members.add(v)
    return IndexSet(n, frozenset(members))


def phi(n: int, R, S) -> IndexSet:
    """Sign set of the unique positive admissible homogeneous S-adapted p-cone."""
    R, S = _as_set(R, n), _as_set(S, n)
    if not S:
        raise EmptyStratumError()
    return _phi_cached(n, R, S)


def phi_paper_variant(n: int, S) -> IndexSet:
    """Literal odd-offset closed formula {s-i : s ∈ S, i odd, 1 <= i < γ(s)}.

    Kept for cross-checking only; it does not agree with :func:`phi`.
    """
    S = _as_set(S, n)
    return IndexSet(n, frozenset(
        reduce(s - i, n) for s in S for i in range(1, gamma(s, S), 2)
    ))


def phi_even_closed_form(n: int, S) -> IndexSet:
    """Even-offset closed form {s-i : s ∈ S, i even, 2 <= i <= γ(s)} for R = ∅."""
    S = _as_set(S, n)
    return IndexSet(n, frozenset(
        reduce(s - i, n) for s in S for i in range(2, gamma(s, S) + 1, 2)
    ))


def is_removable(j: int, n: int, R, S) -> bool:
    R, S = _as_set(R, n), _as_set(S, n)
    if j not in S:
        raise ValueError(f"{j} is not in the stratum")
    if len(S) < 2:
        raise ValueError("removability needs at least two stratum elements")
    return phi(n, R, S) == phi(n, R, S.without(j))


def is_irreducible(n: int, R, S) -> bool:
    S = _as_set(S, n)
    return not any(is_removable(j, n, R, S) for j in S)


def ordered_stratum(S: IndexSet, first: int | None = None) -> tuple[int, ...]:
    """``S`` listed as s_1, s_2, ... with each s_{k+1} following s_k."""
    if not S:
        raise EmptyStratumError()
    s = min(S) if first is None else first
    out = [s]
    while len(out) < len(S):
        out.append(follows(out[-1], S))
    return tuple(out)


@singledispatch
def sigma_shift(obj, t: int = 1, n: int | None = None):
    """Frobenius translation by ``t``: index i goes to i+t, e_i to e_{i+t}."""
    if isinstance(obj, tuple):
        m = len(obj)
        return tuple(obj[reduce(i - t, m) - 1] for i in range(1, m + 1))
    raise TypeError(f"cannot shift {type(obj).__name__}")


@sigma_shift.register
def _(obj: IndexSet, t: int = 1, n: int | None = None) -> IndexSet:
    return IndexSet(obj.n, frozenset(reduce(m + t, obj.n) for m in obj.members))
