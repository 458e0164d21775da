"""Polynomials P_beta, Q_beta with

    S_{2 beta + 1}(n) = P_beta(n) * n * C(2n, n),
    S_{2 beta}(n)     = Q_beta(n) * 2^(2n - beta).

Both are recovered by exact interpolation of brute-force single sums and
then checked at one node beyond the interpolation range.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Poly, binomial, interpolate
from .oracle import single_sum


class InconsistencyError(ArithmeticError):
    """An interpolated or closed-form value failed an exactness check."""


@dataclass(frozen=True)
class TuenterPair:
    beta: int
    p: Poly
    q: Poly


def _p_value(beta: int, n: int) -> Fraction:
    return Fraction(single_sum(2 * beta + 1, n), n * binomial(2 * n, n))


def _q_value(beta: int, n: int) -> Fraction:
    return Fraction(single_sum(2 * beta, n)) * Fraction(2) ** (beta - 2 * n)


def _certify(poly: Poly, beta: int, name: str, check_node: int, expected: Fraction) -> Poly:
    if poly.degree != beta:
        raise InconsistencyError(f"{name}_{beta} has degree {poly.degree}, expected {beta}")
    if not poly.has_integer_coeffs():
        raise InconsistencyError(f"{name}_{beta} has non-integer coefficients: {poly!r}")
    if poly(check_node) != expected:
        raise InconsistencyError(f"{name}_{beta} fails to extrapolate to n={check_node}")
    return poly


@lru_cache(maxsize=None)
def p_poly(beta: int) -> Poly:
    if beta < 0:
        raise ValueError("beta must be >= 0")
    nodes = range(1, beta + 2)
    poly = interpolate([(n, _p_value(beta, n)) for n in nodes])
    extra = beta + 2
    return _certify(poly, beta, "P", extra, _p_value(beta, extra))


@lru_cache(maxsize=None)
def q_poly(beta: int) -> Poly:
    if beta < 0:
        raise ValueError("beta must be >= 0")
    nodes = range(0, beta + 1)
    poly = interpolate([(n, _q_value(beta, n)) for n in nodes])
    extra = beta + 1
    return _certify(poly, beta, "Q", extra, _q_value(beta, extra))


def tuenter_pair(beta: int) -> TuenterPair:
    return TuenterPair(beta, p_poly(beta), q_poly(beta))
