from fractions import Fraction
from math import comb

import pytest

from abssum.exact import N, Poly, RatFunc
from abssum.gamma import (g_consistency_check, g_definition, g_lower, g_table,
                          gamma_denominator_divides, gamma_funcs, odd_product, omega,
                          reassembled_w_odd)
from abssum.oracle import centered_double_sum
from abssum.tuenter import InconsistencyError


def G_direct(k, n, m):
    """Definition of G_k(n, m) with f_0 = 1/2, written out independently."""
    total = Fraction(0)
    for q in range(0, 2 * n + 1):
        f = Fraction(1, 2) if q == 0 else 1
        a = comb(2 * n, n + m + q) if 0 <= n + m + q <= 2 * n else 0
        b = comb(2 * n, n + q) if n + q <= 2 * n else 0
        total += a * b * (m + 2 * q) ** (2 * k + 1) * f
    return total


def test_g_table_examples():
    t = g_table(2, 1, 0)
    assert t[0, 1, 0] == 2
    assert t[1, 1, 0] == 8
    assert t[2, 1, 0] == 32
    assert G_direct(2, 1, 0) == 32


def test_g_table_boundary_rows():
    t = g_table(3, 3, 3)
    for k in range(4):
        for m in range(4):
            assert t[k, 0, m] == 0
            assert t[k, -1, m] == 0


def test_g_recurrence_matches_definition():
    t = g_table(4, 8, 8)
    for k in range(5):
        for n in range(9):
            for m in range(9):
                assert t[k, n, m] == G_direct(k, n, m) == g_definition(k, n, m)


def test_g_reassembly_gives_w_odd():
    for k in range(4):
        for n in range(9):
            assert reassembled_w_odd(k, n) == centered_double_sum(2, 2 * k + 1, n)


def test_g_lower_initial():
    assert g_lower(0, 3, 5) == Fraction(3, 2)
    assert g_lower(1, 2, 1) == Fraction(16 - 1, 3) * 1


@pytest.mark.parametrize("bounds", [(2, 4, 4), (0, 1, 1), (0, 0, 0), (3, 5, 6)])
def test_g_consistency_check(bounds):
    rep = g_consistency_check(*bounds)
    assert rep.passed, rep.failures[:3]


def test_gamma_initial():
    assert gamma_funcs(0).entries == (RatFunc(N, 2),)
    g1 = gamma_funcs(1)
    assert g1[0] == RatFunc(2 * N ** 3, 2 * N - 1)
    assert g1[1] == RatFunc(N * (2 * N - 5), 4 * N - 2)
    assert g1[2] == 0 and g1[-1] == 0


def test_gamma_2_0():
    assert gamma_funcs(2)[0] == RatFunc(8 * N ** 4, 2 * N - 1)


def test_gamma_matches_numeric_g():
    # g_k(n, m) = sum_j gamma_{k,j}(n) m^(2j), checked against the numeric recurrence
    for k in range(6):
        table = gamma_funcs(k)
        for n in range(1, 7):
            for m in range(0, 6):
                symbolic = sum((table[j](n) * m ** (2 * j) for j in range(k + 1)), Fraction(0))
                assert symbolic == g_lower(k, n, m)


def test_gamma_denominators():
    for k in range(7):
        assert gamma_denominator_divides(k)


def test_omega_printed_cases():
    assert omega(0).omega == RatFunc(2 * N ** 2)
    assert omega(1).omega == RatFunc(2 * N ** 3 * (8 * N ** 2 - 12 * N + 5), 2 * N - 1)
    assert omega(2).omega == RatFunc(
        2 * N ** 3 * (128 * N ** 4 - 512 * N ** 3 + 800 * N ** 2 - 568 * N + 153), 2 * N - 1)
    bar3 = Poly([-80847, 417358, -914728, 1106856, -802304, 350464, -86016, 9216])
    assert omega(3).omega == RatFunc(2 * N ** 3 * bar3, (2 * N - 1) * (2 * N - 3))
    assert omega(3).cleared == 2 * N ** 3 * bar3


def test_omega_structure():
    for k in range(7):
        half = -(-k // 2)
        cleared = omega(k).cleared
        assert cleared.degree == 2 * k + half + 2
        assert cleared.has_integer_coeffs()
        assert (odd_product(half) % omega(k).omega.den).is_zero()


def test_omega_3_at_2():
    assert omega(3)(2) * comb(4, 2) ** 2 == centered_double_sum(2, 7, 2) == 463296


def test_omega_vs_oracle():
    for k in range(7):
        for n in range(1, 13):
            assert omega(k)(n) * comb(2 * n, n) ** 2 == centered_double_sum(2, 2 * k + 1, n)


def test_gamma_negative():
    with pytest.raises(ValueError):
        gamma_funcs(-1)
    with pytest.raises(ValueError):
        g_table(-1, 0, 0)


def test_inconsistency_error_is_arithmetic():
    assert issubclass(InconsistencyError, ArithmeticError)
