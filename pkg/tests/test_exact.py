from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from abssum.exact import N, Poly, RatFunc, binomial, interpolate, poly_gcd, ratfunc_shift


@pytest.mark.parametrize("n,k,expected", [(2, 1, 2), (5, -1, 0), (4, 2, 6), (3, 4, 0), (-2, 1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(0, 60), st.integers(-5, 65))
def test_binomial_symmetry_and_pascal(n, k):
    if 0 <= k <= n:
        assert binomial(n, k) == binomial(n, n - k)
    if n >= 1:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_interpolate_examples():
    assert interpolate([(0, 0), (1, 1)]) == N
    assert interpolate([(1, 1), (2, 2), (3, 3)]) == N
    assert interpolate([(0, 1), (1, 2), (2, 5)]) == N ** 2 + 1


def test_interpolate_duplicate_node():
    with pytest.raises(ValueError, match="degenerate interpolation node"):
        interpolate([(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        interpolate([])


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.lists(st.tuples(fractions, fractions), min_size=1, max_size=7,
                unique_by=lambda p: p[0]))
def test_interpolate_reproduces_nodes(points):
    poly = interpolate(points)
    assert poly.degree < len(points)
    for x, y in points:
        assert poly(x) == y
    assert all(isinstance(c, Fraction) for c in poly.coeffs)


polys = st.lists(fractions, max_size=5).map(Poly)


@given(polys, polys, fractions)
def test_poly_ring_ops_agree_with_evaluation(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
    assert (a * b)(x) == a(x) * b(x)
    assert a.shift(3)(x) == a(x + 3)


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_poly_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_poly_gcd():
    a = (N - 1) * (N + 2) * (2 * N - 1)
    b = (N + 2) * (2 * N - 1) ** 2
    assert poly_gcd(a, b) == ((N + 2) * (2 * N - 1)).monic()


def test_zero_poly_has_no_coefficients():
    assert Poly([0, 0]).coeffs == ()
    assert Poly().degree == -1


def test_ratfunc_normalized():
    f = RatFunc((N - 1) * (N + 3), 2 * (N - 1) * N)
    assert f.den.lc == 1
    assert poly_gcd(f.num, f.den).degree == 0
    assert f == RatFunc(N + 3, 2 * N)
    assert RatFunc(0, N) == RatFunc(0)
    with pytest.raises(ZeroDivisionError):
        RatFunc(N, Poly())


def test_ratfunc_shift_examples():
    half_n = RatFunc(N, 2)
    assert ratfunc_shift(half_n, -1) == RatFunc(N - 1, 2)
    g10 = RatFunc(2 * N ** 3, 2 * N - 1)
    assert ratfunc_shift(g10, -1) == RatFunc(2 * (N - 1) ** 3, 2 * N - 3)
    g11 = RatFunc(N * (2 * N - 5), 4 * N - 2)
    assert g11(1) == Fraction(-3, 2)


@given(polys, polys.filter(lambda p: not p.is_zero()), st.integers(-4, 4))
def test_ratfunc_shift_roundtrip(num, den, delta):
    f = RatFunc(num, den)
    assert ratfunc_shift(ratfunc_shift(f, delta), -delta) == f
    assert ratfunc_shift(ratfunc_shift(f, -1), 1) == f


@given(polys, polys.filter(lambda p: not p.is_zero()), fractions)
def test_ratfunc_arith(num, den, x):
    f = RatFunc(num, den)
    g = RatFunc(den + 1, num * num + 1)
    if den(x) == 0:
        return
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)
    assert (f - f).is_zero()


def test_ratfunc_pole():
    with pytest.raises(ZeroDivisionError):
        RatFunc(N, 2 * N - 1)(Fraction(1, 2))


def test_integer_parts():
    num, den = RatFunc(2 * N ** 3 * (8 * N ** 2 - 12 * N + 5), 2 * N - 1).integer_parts()
    assert den == 2 * N - 1
    assert num.int_coeffs() == [0, 0, 0, 10, -24, 16]
