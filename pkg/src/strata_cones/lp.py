"""Exact feasibility of ``target = sum a_i g_i + sum b_j l_j`` with ``a >= 0``.

Square nonsingular systems are solved directly; everything else goes through
a Phase-I simplex over Fractions with Bland's rule (so it terminates).  Every
returned combination is re-checked against the target before it is handed out.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .intlinalg import rank, solve_rational


def _transpose(cols: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    return [[c[r] for c in cols] for r in range(n)]


def phase_one(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Some ``x >= 0`` with ``A x = b``, or None when none exists."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        rows.append([Fraction(sign * a) for a in A[i]] + [Fraction(int(i == j)) for j in range(m)]
                    + [Fraction(sign * b[i])])
    basis = [k + i for i in range(m)]
    width = k + m
    # objective: minimise the sum of artificials, kept as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for r in rows:
        for j in range(k):
            cost[j] -= r[j]
        cost[width] -= r[width]
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[entering] > 0:
                ratio = r[width] / r[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded direction cannot happen in Phase I
            break
        i = best[1]
        piv = rows[i][entering]
        rows[i] = [v / piv for v in rows[i]]
        for t in range(m):
            if t != i and rows[t][entering] != 0:
                f = rows[t][entering]
                rows[t] = [a - f * c for a, c in zip(rows[t], rows[i])]
        if cost[entering] != 0:
            f = cost[entering]
            cost = [a - f * c for a, c in zip(cost, rows[i])]
        basis[i] = entering
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * k
    for i, var in enumerate(basis):
        if var < k:
            x[var] = rows[i][width]
    return x


def feasible_combination(
    target: Sequence[int],
    nonneg: Sequence[Sequence[int]],
    free: Sequence[Sequence[int]] = (),
) -> tuple[list[Fraction], list[Fraction]] | None:
    """Coefficients ``(a, b)`` with ``a >= 0`` reproducing ``target``, or None."""
    n = len(target)
    nonneg, free = list(nonneg), list(free)
    cols = nonneg + free
    if not cols:
        return ([], []) if not any(target) else None
    if len(cols) == n and rank(cols) == n:
        sol = solve_rational(_transpose(cols, n), list(target))
        a, b = sol[: len(nonneg)], sol[len(nonneg):]
        return (a, b) if all(x >= 0 for x in a) else None
    # free variables split as b = b+ - b-
    split = nonneg + free + [[-x for x in f] for f in free]
    x = phase_one(_transpose(split, n), list(target))
    if x is None:
        return None
    k, m = len(nonneg), len(free)
    a = x[:k]
    b = [x[k + j] - x[k + m + j] for j in range(m)]
    combo = [sum(c * g[i] for c, g in zip(a, nonneg)) + sum(c * g[i] for c, g in zip(b, free))
             for i in range(n)]
    if combo != [Fraction(v) for v in target] or any(c < 0 for c in a):
        raise ArithmeticError("simplex returned an invalid combination")
    return a, b
