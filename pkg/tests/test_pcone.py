from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strata_cones.cyclic import EmptyStratumError, IndexSet, all_subsets, phi, reduce, sigma_shift
from strata_cones.intlinalg import cofactor_adjugate, dot, rank, solve_rational
from strata_cones.pcone import (
    PCone,
    PExpression,
    StratumContext,
    adjugate_j,
    classify_pcone,
    cone_crs,
    cone_dominant,
    cone_gs,
    cone_lw,
    cone_pha,
    cone_pha_adjugate,
    cone_pha_generators,
    cyclic_matrix,
    forms_independent,
    gen_weight,
    ha_weight,
    hasse_determinant,
    kernel_KS,
    lambda_generators,
    limit_cone,
    minv_coords,
    p_expression,
    product_cone,
    product_decompose,
    strict_member,
)
from strata_cones.polycone import (
    PolyCone,
    equals,
    intersect,
    is_subcone,
    lattice_equal,
    lineality,
    orthant,
)
from strata_cones.ppoly import P, PPoly
from strata_cones.verify import classify_hasse_regular


def ctx(n, R, S, p=3):
    return StratumContext.make(n, R, S, p)


def contexts(max_n, p=2):
    for n in range(1, max_n + 1):
        for R in all_subsets(n):
            for S in all_subsets(n):
                if S:
                    yield StratumContext(n, R, S, p)


# -- p-expressions ------------------------------------------------------------------------

def test_worked_example_coefficients():
    e = p_expression(4, [3, 4, 6, 8], 8, P)
    expected = (P ** 5, P ** 6, -P ** 7, -1, P, -P ** 2, P ** 3, -P ** 4)
    assert e.coefficients() == expected
    assert e.leading_index == 3


def test_small_expression():
    assert p_expression(1, [], 3, 2).coefficients() == (1, 2, 4)
    assert p_expression(1, [], 3, 2).evaluate((1, 1, 1)) == 7
    with pytest.raises(ValueError):
        p_expression(1, [], 3, 1)


@pytest.mark.parametrize("c", list(contexts(4, P)), ids=str)
def test_gen_pairing_symbolic(c):
    T = phi(c.n, c.R, c.S)
    for i in c.S:
        g = gen_weight(i, c)
        for j in c.S:
            value = PExpression(j, T, c.n, P).evaluate(g)
            assert value == (-(P ** c.n - 1) if i == j else 0)


def test_gen_equals_ha_off_T():
    for c in contexts(5):
        T = phi(c.n, c.R, c.S)
        for i in c.S:
            if i not in T:
                assert gen_weight(i, c) == ha_weight(i, c)
    with pytest.raises(ValueError):
        gen_weight(2, ctx(3, [], [1]))


# -- partial Hasse cones ---------------------------------------------------------------------

def test_ha_examples():
    c = ctx(2, [], [1, 2], P)
    assert ha_weight(1, c) == (1, -P)
    assert ha_weight(2, c) == (-P, 1)
    c = ctx(4, [], [2])
    assert ha_weight(2, c) == (-3, 1, 0, 0)
    assert ha_weight(3, c) == (0, -3, -1, 0)


def test_pha_rank_two():
    c = cone_pha(ctx(2, [], [1, 2], 3))
    assert set(c.hrep) == {(1, 3), (3, 1)}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_pha_dual_constructions(p):
    for c in contexts(4, p):
        gen = cone_pha_generators(c)
        adj = cone_pha_adjugate(c).realized
        assert equals(gen, adj), str(c)
        for i in c.S:
            assert all(dot(f, ha_weight(i, c)) <= 0 for f in adj.hrep)


def test_pha_single_index():
    for c in contexts(5):
        if len(c.S) == 1:
            adj = cone_pha_adjugate(c)
            assert len(adj.expressions) == 1
            assert len(lineality(cone_pha(c))) == c.n - 1


def test_pha_empty_stratum_rejected():
    with pytest.raises(EmptyStratumError):
        cone_pha_adjugate(ctx(3, [], []))


def test_determinant_formula():
    for c in contexts(5, P):
        expected = (-1) ** (c.n - len(c.S)) - (-1) ** len(c.R) * P ** c.n
        assert hasse_determinant(c) == expected
    # the shorter sign (-1)^{|S|} is only right when n is even
    c = ctx(1, [], [1], P)
    assert hasse_determinant(c) != (-1) ** 1 - P


@pytest.mark.parametrize("n", range(1, 8))
def test_adjugate_j_matches_cofactor(n):
    rng = random.Random(n)
    for _ in range(150):
        a = [rng.randint(-9, 9) for _ in range(n)]
        b = [rng.randint(-9, 9) for _ in range(n)]
        assert adjugate_j(a, b) == cofactor_adjugate(cyclic_matrix(a, b))


def test_adjugate_symbolic_small():
    adj = adjugate_j([1, 1], [P, P])
    # M = [[1, -p], [-p, 1]], adj = [[1, p], [p, 1]]
    assert adj == [[1, P], [P, 1]]


def test_kernel_examples():
    assert kernel_KS(ctx(3, [1], [1, 2, 3])) == []
    K = kernel_KS(ctx(2, [], [1], 3))
    assert lattice_equal(K, [(3, 1)])  # ha^(2) = -e2 - 3 e1


@pytest.mark.parametrize("p", [2, 3])
def test_kernel_coherence(p):
    for c in contexts(4, p):
        K = kernel_KS(c)
        assert len(K) == c.n - len(c.S)
        crs = cone_crs(c)
        assert lattice_equal(lineality(cone_pha(c)), K)
        assert lattice_equal(lineality(crs.realized), K)
        for v in K:
            assert all(dot(f, v) == 0 for f in crs.hrep())
        assert forms_independent(crs)
        assert forms_independent(cone_pha_adjugate(c))


# -- C_{R,S} -----------------------------------------------------------------------------------

def test_crs_worked_example():
    c = cone_crs(ctx(8, [1, 3], [4, 6], P))
    assert c.text().splitlines() == [
        "p^5x1 + p^6x2 - p^7x3 - x4 + px5 - p^2x6 + p^3x7 - p^4x8 <= 0",
        "p^3x1 + p^4x2 - p^5x3 - p^6x4 + p^7x5 - x6 + px7 - p^2x8 <= 0",
    ]


def test_crs_full_stratum():
    c = cone_crs(ctx(4, [2], [1, 2, 3, 4], 2))
    for e in c.expressions:
        assert e.T == IndexSet.of(4, [2])
    assert c.starting_indices == (1, 2, 3, 4)


def test_classification_flags():
    for c in contexts(5):
        crs = cone_crs(c)
        f = classify_pcone(crs)
        assert f.s_adapted and f.homogeneous and f.admissible and f.positive and f.hasse_admissible
        assert is_subcone(cone_pha(c), crs.realized)[0]
        g = classify_pcone(cone_pha_adjugate(c))
        assert g.s_adapted and g.admissible and g.positive and g.hasse_admissible
        assert g.homogeneous == classify_hasse_regular(c.n, c.R, c.S), str(c)


def test_positive_single_form():
    c = PCone(ctx(2, [], [1], 2), (p_expression(1, [], 2, 2),))
    assert classify_pcone(c).positive


# -- limit and Griffiths-Schmid cones -------------------------------------------------------------

def test_limit_cone_example():
    lim = limit_cone(cone_crs(ctx(8, [1, 3], [4, 6], 2)))
    assert set(lim.hrep) == {(0, 0, -1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0)}


def test_limit_cone_no_signs():
    c = ctx(4, [], [1, 3], 2)
    pc = PCone(c, tuple(p_expression(d, [], 4, 2) for d in c.S))
    assert set(limit_cone(pc).hrep) == {(0, 0, 0, 1), (0, 1, 0, 0)}


def test_gs_containment_iff_positive():
    rng = random.Random(5)
    seen = set()
    for _ in range(400):
        n = rng.randint(1, 5)
        R = IndexSet.of(n, [i for i in range(1, n + 1) if rng.random() < 0.5])
        S = IndexSet.of(n, [i for i in range(1, n + 1) if rng.random() < 0.5] or [1])
        exprs = tuple(
            p_expression(d, [i for i in range(1, n + 1) if rng.random() < 0.5], n, 2) for d in S
        )
        pc = PCone(StratumContext(n, R, S, 2), exprs)
        positive = classify_pcone(pc).positive
        seen.add(positive)
        assert is_subcone(cone_gs(n, R), limit_cone(pc))[0] == positive
    assert seen == {True, False}


def test_gs_examples():
    assert strict_member((1, -1), 2, [1])
    assert not strict_member((0, 0), 2, [1])
    assert cone_gs(3, [2]).contains((0, 0, 0))
    with pytest.raises(ValueError):
        strict_member((1,), 2, [])


def test_dominant_examples():
    assert equals(cone_dominant(3, []), PolyCone(3, hrep=[]))
    assert equals(cone_dominant(3, [1, 2, 3]), orthant(3))


# -- maximal stratum ------------------------------------------------------------------------------

def test_lambda_example():
    assert lambda_generators(3, [2], P) == [(1, 0, -P), (0, P, 1), (-P ** 2, 0, 1)]
    with pytest.raises(ValueError):
        lambda_generators(2, [1, 2], 3)


@settings(max_examples=100)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.just(n), st.frozensets(st.integers(1, n)), st.sampled_from([2, 3, 5]))))
def test_lambda_count_and_membership(data):
    n, R, p = data
    R = IndexSet(n, R)
    if len(R) == n:
        return
    lam = lambda_generators(n, R, p)
    assert len(lam) == n
    for g in lam:
        for j in range(1, n + 1):
            assert PExpression(j, R, n, p).evaluate(g) <= 0
        assert all(g[i - 1] >= 0 for i in R)
        assert all(y >= 0 for y in minv_coords(g, n, R, p))


def test_minv_zero_and_sign():
    assert minv_coords((0, 0, 0), 3, [2], 3) == [0, 0, 0]
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        R = IndexSet.of(n, [i for i in range(1, n + 1) if rng.random() < 0.4])
        x = [rng.randint(-5, 5) for _ in range(n)]
        y = minv_coords(x, n, R, 2)
        for j in range(1, n + 1):
            if reduce(j - 1, n) not in R and PExpression(j, R, n, 2).evaluate(x) > 0:
                assert y[reduce(j - 1, n) - 1] < 0


@pytest.mark.parametrize("n", range(1, 6))
def test_minv_rescales_basis_coordinates(n):
    # y_i is a positive multiple of the exact coordinate of x in the λ-basis
    p = 3
    for R in all_subsets(n):
        if len(R) == n:
            continue
        lam = lambda_generators(n, R, p)
        cols = [[g[r] for g in lam] for r in range(n)]
        unit = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        coords = [solve_rational(cols, list(e)) for e in unit]  # coords[j][k]
        ys = [minv_coords(e, n, R, p) for e in unit]
        for i in range(n):
            matches = []
            for k in range(n):
                ratios = {ys[j][i] / coords[j][k] if coords[j][k] else None for j in range(n)}
                zero_pattern = all((ys[j][i] == 0) == (coords[j][k] == 0) for j in range(n))
                nonzero = {r for r in ratios if r is not None}
                if zero_pattern and len(nonzero) == 1 and next(iter(nonzero)) > 0:
                    matches.append(k)
            assert len(matches) == 1, (n, R, i)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_lw_matches_crs_dominant(p):
    for n in range(1, 6):
        for R in all_subsets(n):
            c = StratumContext(n, R, IndexSet.full(n), p)
            rhs = intersect(cone_crs(c).realized, cone_dominant(n, R))
            assert equals(cone_lw(n, R, p), rhs)


def test_lw_examples():
    assert set(cone_lw(2, [], 3).hrep) == {(1, 3), (3, 1)}
    assert equals(cone_lw(3, [1, 2, 3], 5), orthant(3))


# -- products -------------------------------------------------------------------------------------

def test_product_single_block_is_identity():
    [f] = product_decompose((4,), [1], [2, 3], 3)
    assert f == ctx(4, [1], [2, 3], 3)


def test_product_two_blocks():
    factors = product_decompose((2, 2), [], [1, 2, 3, 4], 3)
    assert factors == [ctx(2, [], [1, 2], 3)] * 2
    prod = product_cone([cone_crs(f).realized for f in factors])
    assert set(prod.hrep) == {(1, 3, 0, 0), (3, 1, 0, 0), (0, 0, 1, 3), (0, 0, 3, 1)}


def test_product_lineality_adds():
    factors = product_decompose((3, 2), [1, 4], [1, 5], 2)
    parts = [cone_crs(f).realized for f in factors]
    assert len(lineality(product_cone(parts))) == sum(len(lineality(c)) for c in parts) == 3


def test_product_empty_block_named():
    with pytest.raises(EmptyStratumError, match="block 2"):
        product_decompose((2, 3), [], [1], 2)


# -- equivariance ---------------------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.frozensets(st.integers(1, n)),
    st.frozensets(st.integers(1, n), min_size=1),
    st.integers(-6, 6),
    st.sampled_from([2, 3]),
)))
def test_sigma_equivariance(data):
    n, R, S, t, p = data
    c = StratumContext(n, IndexSet(n, R), IndexSet(n, S), p)
    shifted = StratumContext(n, sigma_shift(c.R, t), sigma_shift(c.S, t), p)
    assert equals(cone_crs(shifted).realized, sigma_shift(cone_crs(c).realized, t))
    assert equals(cone_pha(shifted), sigma_shift(cone_pha(c), t))
    a = sigma_shift(cone_crs(c), t)
    b = cone_crs(shifted)
    assert sorted((e.d, e.T) for e in a.expressions) == sorted((e.d, e.T) for e in b.expressions)
    x = tuple(range(1, n + 1))
    for e in cone_crs(c).expressions:
        e2 = PExpression(reduce(e.d + t, n), sigma_shift(e.T, t), n, p)
        assert e.evaluate(x) == e2.evaluate(sigma_shift(x, t))


def test_symbolic_p_guard():
    with pytest.raises(Exception):
        cone_pha(ctx(2, [], [1], P))
