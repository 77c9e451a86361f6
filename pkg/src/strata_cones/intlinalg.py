"""Exact integer linear algebra on small dense matrices.

Vectors are tuples of Python ints, matrices are sequences of such rows.
Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def content(v: Iterable[int]) -> int:
    return reduce(gcd, v, 0)


def primitive(v: Sequence[int]) -> Vector:
    """Divide ``v`` by the gcd of its entries (zero vector is returned as is)."""
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def is_zero(v: Iterable[int]) -> bool:
    return not any(v)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(rows: Iterable[Sequence[int]]) -> list[Vector]:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    The result is the unique reduced echelon basis: pivots positive, entries
    above each pivot reduced into ``[0, pivot)``.  Zero rows are dropped, so
    two generating sets span the same lattice iff their HNFs agree.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == len(mat):
            break
        # gcd-combine every row below into pivot_row
        for i in range(pivot_row + 1, len(mat)):
            b = mat[i][col]
            if b == 0:
                continue
            a = mat[pivot_row][col]
            if a == 0:
                mat[pivot_row], mat[i] = mat[i], mat[pivot_row]
                continue
            g, x, y = _xgcd(a, b)
            ra, rb = mat[pivot_row], mat[i]
            ag, bg = a // g, b // g
            mat[pivot_row] = [x * u + y * v for u, v in zip(ra, rb)]
            mat[i] = [ag * v - bg * u for u, v in zip(ra, rb)]
        if mat[pivot_row][col] == 0:
            continue
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-u for u in mat[pivot_row]]
        pivots.append((pivot_row, col))
        pivot_row += 1
    mat = mat[:pivot_row]
    for r, c in pivots:
        piv = mat[r][c]
        for i in range(r):
            q = mat[i][c] // piv
            if q:
                mat[i] = [u - q * v for u, v in zip(mat[i], mat[r])]
    return [tuple(r) for r in mat]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q (fraction-free elimination)."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        pr = mat[rk]
        a = pr[col]
        for i in range(rk + 1, len(mat)):
            b = mat[i][col]
            if b:
                mat[i] = [a * u - b * v for u, v in zip(mat[i], pr)]
        rk += 1
        if rk == len(mat):
            break
    return rk


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Basis of ``{x in Z^n : r.x = 0 for every row r}`` in HNF.

    The kernel of an integer matrix intersected with Z^n is automatically
    saturated, so this is also the saturated lattice of the rational kernel.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    m = len(rows)
    # [A^T | I_n]: unimodular row ops, rows whose A^T-part dies span ker A
    aug = [[rows[k][i] for k in range(m)] + [int(i == j) for j in range(n)] for i in range(n)]
    pivot_row = 0
    for col in range(m):
        for i in range(pivot_row + 1, n):
            b = aug[i][col]
            if b == 0:
                continue
            a = aug[pivot_row][col]
            if a == 0:
                aug[pivot_row], aug[i] = aug[i], aug[pivot_row]
                continue
            g, x, y = _xgcd(a, b)
            ra, rb = aug[pivot_row], aug[i]
            ag, bg = a // g, b // g
            aug[pivot_row] = [x * u + y * v for u, v in zip(ra, rb)]
            aug[i] = [ag * v - bg * u for u, v in zip(ra, rb)]
        if aug[pivot_row][col] != 0:
            pivot_row += 1
            if pivot_row == n:
                break
    kern = [tuple(r[m:]) for r in aug[pivot_row:]]
    return hnf(kern)


def saturate(rows: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """HNF basis of ``span_Q(rows) ∩ Z^n``."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    return integer_kernel(integer_kernel(rows, n), n)


def same_span(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """True when the rational spans of ``a`` and ``b`` coincide."""
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(list(a) + list(b)) == ra


def in_span(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    return rank(list(basis) + [v]) == rank(basis)


def det_bareiss(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    a = [list(r) for r in mat]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[-1][-1]


def cofactor_adjugate(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Classical adjugate: ``adj[i][j] = (-1)^(i+j) det(minor(j, i))``."""
    size = len(mat)
    if size == 1:
        return [[1]]
    adj = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [
                [mat[r][c] for c in range(size) if c != i]
                for r in range(size)
                if r != j
            ]
            adj[i][j] = (-1) ** (i + j) * det_bareiss(minor)
    return adj


def solve_rational(mat: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Unique solution of a square nonsingular system, or None if singular."""
    size = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    for col in range(size):
        piv = next((i for i in range(col, size) if a[i][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(size):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][size] for i in range(size)]


def project_out(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Primitive integer multiple of the component of ``v`` orthogonal to ``basis``.

    ``basis`` must be linearly independent.  Used to pick canonical ray
    representatives modulo a lineality space.
    """
    if not basis:
        return primitive(v)
    k = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    coeffs = solve_rational(gram, [dot(b, v) for b in basis])
    assert coeffs is not None, "lineality basis is not independent"
    proj = [Fraction(x) for x in v]
    for c, b in zip(coeffs, basis):
        if c:
            proj = [x - c * y for x, y in zip(proj, b)]
    den = reduce(lambda acc, f: acc * f.denominator // gcd(acc, f.denominator), proj, 1)
    return primitive([int(x * den) for x in proj])
