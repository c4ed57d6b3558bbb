import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indrecon.errors import ResourceLimitError
from indrecon.graph import complete, cycle, empty_graph, path, star, wheel
from indrecon.indsets import (
    IndependencePolynomial,
    enumerate_independent_sets,
    eval_at,
    independence_number,
    independence_polynomial,
    parity_counts,
)

from oracles import poly_by_deletion, powerset_independent
from strategies import graphs


def test_star_family_size():
    assert len(enumerate_independent_sets(star(3), 3, True)) == 9


@given(graphs(max_n=8))
def test_k0_is_only_empty_set(g):
    fam = enumerate_independent_sets(g, 0, True)
    assert fam.sets == (0,)
    assert len(enumerate_independent_sets(g, 0, False)) == 0


def test_p5_without_empty():
    # oracle: 13 independent subsets of P_5 have size <= 3, one of them empty
    fam = enumerate_independent_sets(path(5), 3, False)
    assert len(fam) == 12
    assert 0 not in fam


def test_canonical_order_and_index():
    fam = enumerate_independent_sets(path(4), 2)
    assert fam.sets == (0, 1, 2, 4, 8, 0b0101, 0b1001, 0b1010)
    assert all(fam.index_of[s] == i for i, s in enumerate(fam.sets))


def test_k_above_alpha_is_alpha():
    assert enumerate_independent_sets(cycle(5), 9).sets == enumerate_independent_sets(cycle(5), 2).sets


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        enumerate_independent_sets(path(3), -1)


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_independent_sets(empty_graph(12), 12, limit=1000)
    with pytest.raises(ResourceLimitError):
        independence_polynomial(empty_graph(12), limit=4095)
    assert independence_polynomial(empty_graph(12), limit=4096).coeffs[6] == 924


@settings(max_examples=150)
@given(graphs(max_n=12), st.integers(0, 12), st.booleans())
def test_enumeration_matches_powerset(g, k, include_empty):
    expected = powerset_independent(g, k)
    if not include_empty:
        expected.discard(0)
    fam = enumerate_independent_sets(g, k, include_empty)
    assert set(fam.sets) == expected
    assert len(fam.sets) == len(expected)
    assert list(fam.sets) == sorted(fam.sets, key=lambda s: (bin(s).count("1"), s))


@settings(max_examples=100)
@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_downward_closed(g, rnd):
    fam = enumerate_independent_sets(g, g.n)
    for s in fam.sets:
        if s:
            bits = [v for v in range(g.n) if s >> v & 1]
            assert s & ~(1 << rnd.choice(bits)) in fam


def test_independence_number_examples():
    for n in range(1, 10):
        assert independence_number(complete(n)) == 1
        assert independence_number(empty_graph(n)) == n
    assert independence_number(path(5)) == 3


@given(graphs(max_n=12))
def test_independence_number_brute(g):
    assert independence_number(g) == max(bin(s).count("1") for s in powerset_independent(g))


def test_polynomial_examples():
    for n in range(1, 8):
        assert independence_polynomial(complete(n)).coeffs == (1, n)
    assert independence_polynomial(cycle(4)).coeffs == (1, 4, 2)
    assert independence_polynomial(path(5)).coeffs == (1, 5, 6, 1)


@given(graphs(max_n=14))
def test_polynomial_matches_deletion_recurrence(g):
    p = independence_polynomial(g)
    assert list(p.coeffs) == poly_by_deletion(g)
    assert p.coeffs[0] == 1
    assert p.coeffs[-1] >= 1
    assert len(p.coeffs) == independence_number(g) + 1
    assert p.coeffs[1] == g.n


@pytest.mark.parametrize("n", [20, 25, 30])
def test_polynomial_large_families(n):
    for g in (path(n), cycle(n), wheel(n)):
        assert list(independence_polynomial(g).coeffs) == poly_by_deletion(g)


@given(graphs(max_n=10))
def test_polynomial_counts_enumeration(g):
    p = independence_polynomial(g)
    fam = enumerate_independent_sets(g, independence_number(g))
    assert sum(p.coeffs) == len(fam)
    for j, c in enumerate(p.coeffs):
        assert c == sum(1 for s in fam if bin(s).count("1") == j)


def test_eval_examples():
    for n in range(1, 8):
        assert eval_at(IndependencePolynomial((1, n)), 1) == n + 1
    assert eval_at(IndependencePolynomial((1, 4, 2)), -1) == -1
    assert eval_at(IndependencePolynomial((1, 4, 2)), 0) == 1
    assert independence_polynomial(path(5))(2) == 1 + 10 + 24 + 8


def test_eval_is_exact_beyond_64_bits():
    from math import comb

    p = IndependencePolynomial(tuple(comb(63, j) for j in range(64)))
    assert eval_at(p, 3) == 4**63
    assert eval_at(p, -3) == -(2**63)
    assert independence_polynomial(empty_graph(20)).coeffs == tuple(comb(20, j) for j in range(21))


def test_parity_examples():
    assert parity_counts(independence_polynomial(star(3))) == (4, 5)
    assert parity_counts(independence_polynomial(complete(5))) == (1, 5)
    assert parity_counts(independence_polynomial(path(4))) == (4, 4)


@given(graphs(max_n=12))
def test_parity_identities(g):
    p = independence_polynomial(g)
    f0, f1 = parity_counts(p)
    assert eval_at(p, 1) - eval_at(p, -1) == 2 * f1
    assert eval_at(p, 1) + eval_at(p, -1) == 2 * f0


def _pow(n):
    return (-1) ** n


@pytest.mark.parametrize("n", range(1, 11))
def test_alternating_number_closed_forms(n):
    # closed forms for I(.; -1); wheel orders count the hub. C_32 needs ~4.9M sets.
    val = lambda g: eval_at(independence_polynomial(g, limit=1 << 23), -1)
    assert val(path(3 * n - 2)) == 0
    assert val(path(3 * n - 1)) == val(path(3 * n)) == _pow(n)
    assert val(cycle(3 * n)) == 2 * _pow(n)
    assert val(cycle(3 * n + 1)) == _pow(n)
    assert val(cycle(3 * n + 2)) == _pow(n + 1)
    assert val(wheel(3 * n + 1)) == 2 * _pow(n) - 1
    if 3 * n >= 4:
        assert val(wheel(3 * n)) == _pow(n) - 1
    assert val(wheel(3 * n + 2)) == _pow(n) - 1


@pytest.mark.parametrize("n", range(4, 20))
def test_wheel_is_rim_plus_x(n):
    rim = independence_polynomial(cycle(n - 1)).coeffs
    wh = independence_polynomial(wheel(n)).coeffs
    assert wh[0] == rim[0] and wh[1] == rim[1] + 1 and wh[2:] == rim[2:]
