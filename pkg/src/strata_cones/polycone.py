"""Exact rational polyhedral cones in Z^n.

A :class:`PolyCone` is the set of integer points of a rational polyhedral
cone.  It can be given by inequalities (``hrep``, each form ``f`` meaning
``f.x <= 0``) or by generators (``rays`` with nonnegative coefficients plus
``lineality`` vectors with arbitrary coefficients).  The missing side is
computed on demand with the double description method and cached.

Because every cone is taken to be the integer points of its rational hull,
saturated sums reduce to hulls of unions and no Hilbert basis is ever needed.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .intlinalg import (
    Vector,
    dot,
    hnf,
    integer_kernel,
    primitive,
    project_out,
    saturate,
)


class ConeError(ValueError):
    pass


def _clean(vectors: Iterable[Sequence[int]], n: int) -> tuple[Vector, ...]:
    out = set()
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != n:
            raise ConeError(f"vector {v} has length {len(v)}, expected {n}")
        if any(v):
            out.add(primitive(v))
    return tuple(sorted(out))


def double_description(rows: Sequence[Sequence[int]], n: int) -> tuple[list[Vector], list[Vector]]:
    """Generators of ``{x in Q^n : r.x <= 0 for r in rows}``.

    Returns ``(lineality, rays)``: a basis of the lineality space (not
    necessarily saturated) and one representative per extreme ray of the
    cone modulo that space.  Rays are kept primitive throughout.
    """
    rows = [tuple(r) for r in rows if any(r)]
    lin: list[Vector] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[Vector] = []
    masks: list[int] = []
    for k, a in enumerate(rows):
        bit = 1 << k
        vals = [dot(a, l) for l in lin]
        j = next((i for i, v in enumerate(vals) if v), None)
        if j is not None:
            # the new constraint cuts the lineality space: one lineality
            # direction turns into a ray, everything else is sheared into a.x = 0
            l0, v0 = lin[j], vals[j]
            if v0 > 0:
                l0, v0 = tuple(-x for x in l0), -v0
            alpha = -v0
            new_lin = []
            for i, (l, v) in enumerate(zip(lin, vals)):
                if i == j:
                    continue
                if v:
                    l = primitive([alpha * x + v * y for x, y in zip(l, l0)])
                new_lin.append(l)
            new_rays, new_masks = [], []
            for r, m in zip(rays, masks):
                v = dot(a, r)
                if v:
                    r = primitive([alpha * x + v * y for x, y in zip(r, l0)])
                new_rays.append(r)
                new_masks.append(m | bit)
            new_rays.append(l0)
            new_masks.append(bit - 1)
            lin, rays, masks = new_lin, new_rays, new_masks
            continue

        plus, zero, minus = [], [], []
        signs = []
        for idx, r in enumerate(rays):
            v = dot(a, r)
            signs.append(v)
            if v > 0:
                plus.append(idx)
            elif v < 0:
                minus.append(idx)
            else:
                zero.append(idx)
        if not plus:
            masks = [m | bit if s == 0 else m for m, s in zip(masks, signs)]
            continue

        need = n - len(lin) - 2
        new_rays, new_masks = [], []
        for ip in plus:
            mp, rp, vp = masks[ip], rays[ip], signs[ip]
            for im in minus:
                common = mp & masks[im]
                if common.bit_count() < need:
                    continue
                adjacent = True
                for o, mo in enumerate(masks):
                    if mo & common == common and o != ip and o != im:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vm = signs[im]
                rm = rays[im]
                new = primitive([vp * y - vm * x for x, y in zip(rp, rm)])
                new_rays.append(new)
                new_masks.append(common | bit)
        for idx in zero:
            new_rays.append(rays[idx])
            new_masks.append(masks[idx] | bit)
        for idx in minus:
            new_rays.append(rays[idx])
            new_masks.append(masks[idx])
        rays, masks = new_rays, new_masks
    return lin, rays


def _h_to_v(hrep: Sequence[Vector], n: int) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    _, raw = double_description(hrep, n)
    lineality = tuple(integer_kernel(hrep, n))
    rays = _clean((project_out(r, lineality) for r in raw), n)
    return rays, lineality


def _v_to_h(rays: Sequence[Vector], lineality: Sequence[Vector], n: int) -> tuple[Vector, ...]:
    rows = list(rays) + list(lineality) + [tuple(-x for x in l) for l in lineality]
    _, raw = double_description(rows, n)
    equalities = integer_kernel(rows, n)
    facets = [project_out(f, equalities) for f in raw]
    eq_pairs = [e for eq in equalities for e in (eq, tuple(-x for x in eq))]
    return _clean(facets + eq_pairs, n)


@dataclass(frozen=True)
class Certificate:
    """Witness that a generator escapes a cone: ``form . generator > 0``."""

    generator: Vector
    form: Vector
    value: int


class PolyCone:
    """Rational polyhedral cone, integer-point semantics.

    Parameters
    ----------
    n : ambient rank.
    hrep : inequality normals, ``f.x <= 0``.
    rays, lineality : generators.  At least one of ``hrep`` or the
        generator pair must be given; both may be, in which case they are
        trusted to describe the same cone.
    """

    __slots__ = ("n", "_hrep", "_rays", "_lin", "_lock", "_canon")

    def __init__(
        self,
        n: int,
        hrep: Iterable[Sequence[int]] | None = None,
        rays: Iterable[Sequence[int]] | None = None,
        lineality: Iterable[Sequence[int]] | None = None,
    ):
        if n < 0:
            raise ConeError("negative ambient rank")
        self.n = n
        self._hrep = _clean(hrep, n) if hrep is not None else None
        if rays is None and lineality is None:
            self._rays = self._lin = None
        else:
            self._rays = _clean(rays or (), n)
            self._lin = tuple(hnf(_clean(lineality or (), n)))
        if self._hrep is None and self._rays is None:
            raise ConeError("a cone needs an H- or a V-representation")
        self._lock = threading.Lock()
        self._canon = None

    # -- representations ---------------------------------------------------
    @property
    def has_hrep(self) -> bool:
        return self._hrep is not None

    @property
    def has_vrep(self) -> bool:
        return self._rays is not None

    @property
    def hrep(self) -> tuple[Vector, ...]:
        if self._hrep is None:
            with self._lock:
                if self._hrep is None:
                    self._hrep = _v_to_h(self._rays, self._lin, self.n)
        return self._hrep

    def _ensure_vrep(self) -> None:
        if self._rays is None:
            with self._lock:
                if self._rays is None:
                    rays, lin = _h_to_v(self._hrep, self.n)
                    self._lin = lin
                    self._rays = rays

    @property
    def rays(self) -> tuple[Vector, ...]:
        self._ensure_vrep()
        return self._rays

    @property
    def lineality_generators(self) -> tuple[Vector, ...]:
        self._ensure_vrep()
        return self._lin

    def canonical(self) -> "PolyCone":
        """Equal cone with irredundant H-rep, extreme rays and HNF lineality."""
        if self._canon is None:
            rays, lin = _h_to_v(self.hrep, self.n)
            hrep = _v_to_h(rays, lin, self.n)
            canon = PolyCone(self.n, hrep=hrep, rays=rays, lineality=lin)
            canon._canon = canon
            self._canon = canon
        return self._canon

    # -- predicates ----------------------------------------------------------
    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.n:
            raise ConeError(f"weight of length {len(x)} in a rank-{self.n} cone")
        return all(dot(f, x) <= 0 for f in self.hrep)

    def violated(self, x: Sequence[int]) -> Vector | None:
        """First inequality of the H-rep violated by ``x`` (None if member)."""
        for f in self.hrep:
            if dot(f, x) > 0:
                return f
        return None

    def __repr__(self) -> str:
        parts = [f"n={self.n}"]
        if self._hrep is not None:
            parts.append(f"hrep={list(self._hrep)}")
        if self._rays is not None:
            parts.append(f"rays={list(self._rays)}, lineality={list(self._lin)}")
        return f"PolyCone({', '.join(parts)})"


# -- constructors -----------------------------------------------------------

def full_space(n: int) -> PolyCone:
    return PolyCone(n, hrep=(), rays=(), lineality=[tuple(int(i == j) for j in range(n)) for i in range(n)])


def zero_cone(n: int) -> PolyCone:
    eqs = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return PolyCone(n, hrep=eqs + [tuple(-x for x in e) for e in eqs], rays=(), lineality=())


def orthant(n: int) -> PolyCone:
    eye = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return PolyCone(n, hrep=[tuple(-x for x in e) for e in eye], rays=eye, lineality=())


# -- operations --------------------------------------------------------------

def dd_convert(cone: PolyCone, direction: str = "h2v") -> PolyCone:
    """Return the cone with both representations present.

    ``h2v`` keeps the inequalities and derives generators, ``v2h`` keeps the
    generators and derives inequalities.
    """
    if direction == "h2v":
        if not cone.has_hrep:
            raise ConeError("h2v conversion needs an H-representation")
        rays, lin = _h_to_v(cone.hrep, cone.n)
        return PolyCone(cone.n, hrep=cone.hrep, rays=rays, lineality=lin)
    if direction == "v2h":
        if not cone.has_vrep:
            raise ConeError("v2h conversion needs a V-representation")
        hrep = _v_to_h(cone.rays, cone.lineality_generators, cone.n)
        return PolyCone(cone.n, hrep=hrep, rays=cone.rays, lineality=cone.lineality_generators)
    raise ConeError(f"unknown direction {direction!r}")


def _check_rank(a: PolyCone, b: PolyCone) -> None:
    if a.n != b.n:
        raise ConeError(f"rank mismatch: {a.n} vs {b.n}")


def intersect(a: PolyCone, b: PolyCone) -> PolyCone:
    """Intersection, returned with an irredundant H-rep and its generators."""
    _check_rank(a, b)
    return PolyCone(a.n, hrep=a.hrep + b.hrep).canonical()


def intersect_all(cones: Sequence[PolyCone], n: int | None = None) -> PolyCone:
    if not cones:
        if n is None:
            raise ConeError("empty intersection needs an explicit rank")
        return full_space(n)
    for c in cones[1:]:
        _check_rank(cones[0], c)
    rows = [f for c in cones for f in c.hrep]
    return PolyCone(cones[0].n, hrep=rows).canonical()


def sum_saturated(a: PolyCone, b: PolyCone) -> PolyCone:
    """Saturation of ``a + b``: the hull of both generator sets."""
    _check_rank(a, b)
    rays = a.rays + b.rays
    lin = a.lineality_generators + b.lineality_generators
    return PolyCone(a.n, rays=rays, lineality=lin).canonical()


def lineality(cone: PolyCone) -> list[Vector]:
    """HNF basis of the largest subgroup contained in the cone."""
    return integer_kernel(cone.hrep, cone.n)


def is_subcone(a: PolyCone, b: PolyCone) -> tuple[bool, Certificate | None]:
    """Decide ``a ⊆ b``; on failure return a generator of ``a`` and a violated form of ``b``."""
    _check_rank(a, b)
    gens = list(a.rays)
    for l in a.lineality_generators:
        gens.append(l)
        gens.append(tuple(-x for x in l))
    for g in gens:
        for f in b.hrep:
            v = dot(f, g)
            if v > 0:
                return False, Certificate(g, f, v)
    return True, None


def equals(a: PolyCone, b: PolyCone) -> bool:
    return is_subcone(a, b)[0] and is_subcone(b, a)[0]


def product(cones: Sequence[PolyCone]) -> PolyCone:
    """Direct product, each factor on its own consecutive coordinate block."""
    n = sum(c.n for c in cones)
    hrep, rays, lin = [], [], []
    offset = 0
    for c in cones:
        def embed(v, off=offset, m=c.n):
            return (0,) * off + tuple(v) + (0,) * (n - off - m)
        hrep.extend(embed(f) for f in c.hrep)
        rays.extend(embed(r) for r in c.rays)
        lin.extend(embed(l) for l in c.lineality_generators)
        offset += c.n
    return PolyCone(n, hrep=hrep, rays=rays, lineality=lin)


def lattice_equal(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Equality of the lattices spanned (not saturated) by two generating sets."""
    return hnf(a) == hnf(b)


def saturated_span(vectors: Sequence[Sequence[int]], n: int) -> list[Vector]:
    return saturate(vectors, n)


def generates_modulo_kernel(cone: PolyCone, gens: Sequence[Sequence[int]]) -> bool:
    """Every ray of ``cone`` is a nonnegative combination of ``gens`` modulo its lineality.

    Raises :class:`GeneratorOutsideCone` when a listed generator is not in the cone.
    """
    from .lp import feasible_combination

    for g in gens:
        f = cone.violated(g)
        if f is not None:
            raise GeneratorOutsideCone(tuple(g), f, dot(f, g))
    lin = cone.lineality_generators
    return all(feasible_combination(r, gens, lin) is not None for r in cone.rays)


class GeneratorOutsideCone(ConeError):
    def __init__(self, generator, form, value):
        self.certificate = Certificate(tuple(generator), tuple(form), value)
        super().__init__(f"generator {generator} violates {form} (value {value})")
