"""Integer polynomials in the indeterminate p.

Only what symbolic p-expressions need: ring arithmetic, exact division,
evaluation and printing.  Positivity questions are delegated to sympy.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

Scalar = Union[int, "PPoly"]


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PPoly:
    """Polynomial sum(c[k] * p**k) with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def p(cls) -> "PPoly":
        return cls((0, 1))

    @classmethod
    def lift(cls, x: Scalar) -> "PPoly":
        return x if isinstance(x, PPoly) else cls((x,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, PPoly)):
            return self.coeffs == PPoly.lift(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "PPoly":
        return PPoly(-c for c in self.coeffs)

    def __add__(self, other: Scalar) -> "PPoly":
        o = PPoly.lift(other).coeffs
        a = self.coeffs
        m = max(len(a), len(o))
        return PPoly((a[k] if k < len(a) else 0) + (o[k] if k < len(o) else 0) for k in range(m))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "PPoly":
        return self + (-PPoly.lift(other))

    def __rsub__(self, other: Scalar) -> "PPoly":
        return PPoly.lift(other) - self

    def __mul__(self, other: Scalar) -> "PPoly":
        o = PPoly.lift(other).coeffs
        a = self.coeffs
        if not a or not o:
            return PPoly()
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return PPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PPoly":
        if e < 0:
            raise ValueError("negative power")
        out, base = PPoly((1,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: Scalar) -> tuple["PPoly", "PPoly"]:
        """Division with remainder; requires the divisor's leading coefficient to divide evenly."""
        d = PPoly.lift(other).coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        lead = d[-1]
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                raise ArithmeticError("inexact leading division")
            q = c // lead
            quot[k] = q
            if q:
                for j, y in enumerate(d):
                    rem[k + j] -= q * y
        return PPoly(quot), PPoly(rem)

    def exact_div(self, other: Scalar) -> "PPoly | None":
        try:
            q, r = self.divmod(other)
        except ArithmeticError:
            return None
        return q if not r else None

    def __call__(self, value: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def __repr__(self) -> str:
        return f"PPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("p" if k == 1 else f"p^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


P = PPoly.p()


@lru_cache(maxsize=None)
def _positive_from(coeffs: tuple[int, ...], lower: int) -> bool:
    import sympy

    x = sympy.Symbol("p")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    if poly.eval(lower) <= 0:
        return False
    return poly.count_roots(lower, None) == 0


def is_positive_for_primes(f: Scalar, lower: int = 2) -> bool:
    """True when ``f(p) > 0`` for every real ``p >= lower``."""
    f = PPoly.lift(f)
    if not f:
        return False
    return _positive_from(f.coeffs, lower)
