from __future__ import annotations

import sympy
from hypothesis import given
from hypothesis import strategies as st

from strata_cones.ppoly import P, PPoly, is_positive_for_primes

coeff_lists = st.lists(st.integers(-20, 20), max_size=6)
x = sympy.Symbol("p")


def to_sympy(f: PPoly):
    return sum(c * x ** k for k, c in enumerate(f.coeffs))


@given(coeff_lists, coeff_lists)
def test_ring_ops_match_sympy(a, b):
    f, g = PPoly(a), PPoly(b)
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f - g) - (to_sympy(f) - to_sympy(g))) == 0


@given(coeff_lists, st.integers(-5, 5))
def test_eval(a, v):
    assert PPoly(a)(v) == sum(c * v ** k for k, c in enumerate(a))


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_exact_div_round_trip(a, b):
    f, g = PPoly(a), PPoly(b)
    if not g:
        return
    assert (f * g).exact_div(g) == f


def test_printing_and_equality():
    assert str(P ** 3 - P) == "p^3 - p"
    assert str(-2 * P ** 2 + 1) == "-2*p^2 + 1"
    assert str(PPoly()) == "0"
    assert PPoly((5,)) == 5 and P != 2
    assert hash(P * P) == hash(P ** 2)
    assert (P ** 2 + 1).exact_div(P) is None


def test_positivity():
    assert is_positive_for_primes(P * (P ** 2 - 1))
    assert not is_positive_for_primes(P - 3)
    assert not is_positive_for_primes(PPoly())
    assert is_positive_for_primes(P ** 2 - 5 * P + 7)  # no real roots
    assert not is_positive_for_primes(P ** 2 - 5 * P + 6)  # vanishes at 2 and 3
    assert is_positive_for_primes(4)
