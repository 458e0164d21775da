from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from abssum.oracle import (SumFamily, SumSpec, centered_double_sum, double_diff_sum,
                           generic_sum, half_center_sum, mixed_power_sum, single_sum,
                           triple_vandermonde_sum, unrestricted_double_sum)
from abssum.weights import parse_weight
from conftest import brute


@pytest.mark.parametrize("beta,n,expected", [(1, 1, 2), (0, 2, 16), (1, 2, 12)])
def test_single_sum_examples(beta, n, expected):
    assert single_sum(beta, n) == expected == brute(lambda k: abs(k) ** beta, [n])


@pytest.mark.parametrize("beta,n,expected", [(1, 2, 2), (1, 1, 1), (0, 3, 8)])
def test_half_center_sum_examples(beta, n, expected):
    assert half_center_sum(beta, n) == expected


def test_half_center_sum_half_integer_centers():
    # n = 3: centers at +-3/2, +-1/2
    assert half_center_sum(1, 3) == Fraction(1 * 3 + 3 * 1 + 3 * 1 + 1 * 3, 2)
    assert half_center_sum(2, 1) == Fraction(1, 2)


@pytest.mark.parametrize("beta,m,n,expected", [(1, 1, 1, 12), (0, 2, 1, 64), (2, 1, 2, 96)])
def test_double_diff_sum_examples(beta, m, n, expected):
    assert double_diff_sum(beta, m, n) == expected
    assert brute(lambda k, l: abs(k - l) ** beta, [m, n]) == expected


@pytest.mark.parametrize("alpha,beta,n,expected", [(2, 1, 1, 8), (1, 1, 1, 12),
                                                   (1, 0, 1, 16), (5, 0, 1, 16)])
def test_centered_double_sum_examples(alpha, beta, n, expected):
    assert centered_double_sum(alpha, beta, n) == expected
    assert brute(lambda k, l: abs(k ** alpha - l ** alpha) ** beta, [n, n]) == expected


@pytest.mark.parametrize("beta,n,expected", [(1, 2, 12), (0, 1, 4), (1, 3, 60)])
def test_unrestricted_examples(beta, n, expected):
    assert unrestricted_double_sum(beta, n) == expected
    direct = sum(comb(n, k) * comb(n, l) * abs(k - l) ** beta
                 for k in range(n + 1) for l in range(n + 1))
    assert direct == expected


@pytest.mark.parametrize("n_list,src,expected", [
    ([1], "abs(k1)", 2),
    ([1, 1], "abs(k1^2-k2^2)", 8),
    ([1, 2], "abs(k1-k2)", 60),
])
def test_generic_sum_examples(n_list, src, expected):
    assert generic_sum(n_list, src) == expected
    assert generic_sum(n_list, parse_weight(src, len(n_list))) == expected


def test_generic_sum_errors():
    with pytest.raises(ValueError, match="arity"):
        generic_sum([1, 1], parse_weight("k1", 1))
    with pytest.raises(ValueError, match="at most 6"):
        generic_sum([0] * 7, "k1")
    with pytest.raises(ValueError):
        generic_sum([-1], "k1")


@pytest.mark.parametrize("n,expected", [(0, 0), (1, 0), (2, 6912)])
def test_triple_examples(n, expected):
    assert triple_vandermonde_sum(n) == expected


def test_triple_matches_generic_and_brute():
    src = "abs((i^2-j^2)*(i^2-k^2)*(j^2-k^2))"
    for n in range(4):
        t = triple_vandermonde_sum(n)
        assert t == generic_sum([n, n, n], src)
        assert t == brute(lambda i, j, k: abs((i * i - j * j) * (i * i - k * k) * (j * j - k * k)),
                          [n, n, n])


def test_mixed_power_sum_brute():
    for m in range(4):
        for n in range(4):
            assert mixed_power_sum(2, 1, m, n) == brute(lambda k, l: abs(k * k - l * l), [m, n])
    assert mixed_power_sum(2, 1, 1, 2) == 56


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 7))
def test_centered_symmetric_and_even(alpha, beta, n):
    v = centered_double_sum(alpha, beta, n)
    assert v >= 0
    assert v % 2 == 0
    assert v == brute(lambda l, k: abs(k ** alpha - l ** alpha) ** beta, [n, n])


def test_double_diff_symmetric():
    for beta in range(4):
        for m in range(11):
            for n in range(m, 11):
                assert double_diff_sum(beta, m, n) == double_diff_sum(beta, n, m)


def test_single_equals_half_center():
    for beta in range(7):
        for n in range(13):
            assert single_sum(beta, n) == half_center_sum(beta, 2 * n)


def test_generic_reproduces_specialized():
    for n in range(5):
        for beta in range(4):
            assert generic_sum([n], f"abs(k1)^{beta}") == single_sum(beta, n)
            assert generic_sum([n, n], f"abs(k1^2-k2^2)^{beta}") == centered_double_sum(2, beta, n)
            for m in range(4):
                assert generic_sum([m, n], f"abs(k1-k2)^{beta}") == double_diff_sum(beta, m, n)


def test_sumspec_dispatch():
    assert SumSpec(SumFamily.SINGLE_S, beta=1, n=2).evaluate() == 12
    assert SumSpec(SumFamily.HALF_U, beta=1, n=1).evaluate() == Fraction(1, 2) * 2
    assert SumSpec(SumFamily.DOUBLE_T, beta=2, m=1, n=2).evaluate() == 96
    assert SumSpec(SumFamily.CENTERED, alpha=2, beta=1, n=1).evaluate() == 8
    assert SumSpec(SumFamily.TRIPLE_VDM, n=2).evaluate() == 6912
    assert SumSpec(SumFamily.UNRESTRICTED, beta=1, n=3).evaluate() == 60
    w = parse_weight("abs(k1-k2)", 2)
    assert SumSpec(SumFamily.GENERIC, n_list=(1, 2), weight=w).evaluate() == 60
    with pytest.raises(ValueError):
        SumSpec(SumFamily.GENERIC, n_list=(1,), weight=w)
    with pytest.raises(ValueError):
        SumSpec(SumFamily.CENTERED, alpha=0)


def test_negative_parameters_rejected():
    with pytest.raises(ValueError):
        single_sum(-1, 2)
    with pytest.raises(ValueError):
        centered_double_sum(2, 1, -1)
