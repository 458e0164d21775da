"""Brute-force evaluation of the binomial sums, used as ground truth.

Every function sums the definition term by term over the full index range.
No folding by symmetry is done here, so these values can be used to check
the closed forms and recurrences independently.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import List, Optional, Sequence, Tuple, Union

from .exact import binomial
from .weights import WeightExpr, parse_weight

MAX_GENERIC_DIMS = 6


def centered_row(n: int) -> List[int]:
    """[C(2n, n+k) for k = -n..n]."""
    return [binomial(2 * n, n + k) for k in range(-n, n + 1)]


def single_sum(beta: int, n: int) -> int:
    """S_beta(n) = sum_k C(2n, n+k) |k|^beta."""
    _check_nonneg(beta=beta, n=n)
    row = centered_row(n)
    return sum(c * abs(k) ** beta for c, k in zip(row, range(-n, n + 1)))


def half_center_sum(beta: int, n: int) -> Fraction:
    """U_beta(n) = sum_k C(n, k) |n/2 - k|^beta, as an exact rational."""
    _check_nonneg(beta=beta, n=n)
    # |n/2 - k|^beta = |n - 2k|^beta / 2^beta
    total = sum(binomial(n, k) * abs(n - 2 * k) ** beta for k in range(n + 1))
    return Fraction(total, 2 ** beta)


def double_diff_sum(beta: int, m: int, n: int) -> int:
    """T_beta(m, n) = sum_{k,l} C(2m, m+k) C(2n, n+l) |k - l|^beta."""
    _check_nonneg(beta=beta, m=m, n=n)
    rm, rn = centered_row(m), centered_row(n)
    total = 0
    for k, a in zip(range(-m, m + 1), rm):
        for l, b in zip(range(-n, n + 1), rn):
            total += a * b * abs(k - l) ** beta
    return total


def mixed_power_sum(alpha: int, beta: int, m: int, n: int) -> int:
    """sum_{k,l} C(2m, m+k) C(2n, n+l) |k^alpha - l^alpha|^beta."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    _check_nonneg(beta=beta, m=m, n=n)
    rm, rn = centered_row(m), centered_row(n)
    pk = [k ** alpha for k in range(-m, m + 1)]
    pl = [l ** alpha for l in range(-n, n + 1)]
    total = 0
    for a, x in zip(rm, pk):
        inner = 0
        for b, y in zip(rn, pl):
            inner += b * abs(x - y) ** beta
        total += a * inner
    return total


def centered_double_sum(alpha: int, beta: int, n: int) -> int:
    """S_{alpha,beta}(n); with alpha = 2 this is W_beta(n)."""
    return mixed_power_sum(alpha, beta, n, n)


def unrestricted_double_sum(beta: int, n: int) -> int:
    """sum_{k,l} C(n, k) C(n, l) |k - l|^beta (n may be odd)."""
    _check_nonneg(beta=beta, n=n)
    row = [binomial(n, k) for k in range(n + 1)]
    total = 0
    for k, a in enumerate(row):
        for l, b in enumerate(row):
            total += a * b * abs(k - l) ** beta
    return total


def generic_size(n_list: Sequence[int]) -> int:
    return prod(2 * n + 1 for n in n_list)


def generic_sum(n_list: Sequence[int], weight: Union[WeightExpr, str]) -> int:
    """sum over k_i in [-n_i, n_i] of prod C(2n_i, n_i+k_i) * weight(k)."""
    n_list = list(n_list)
    if isinstance(weight, str):
        weight = parse_weight(weight, len(n_list))
    d = len(n_list)
    if d != weight.arity:
        raise ValueError(f"arity mismatch: {d} step counts for a weight of arity {weight.arity}")
    if d < 1:
        raise ValueError("need at least one dimension")
    if d > MAX_GENERIC_DIMS:
        raise ValueError(f"generic_sum supports at most {MAX_GENERIC_DIMS} dimensions, got {d}")
    if any(n < 0 for n in n_list):
        raise ValueError("step counts must be non-negative")
    rows = [list(zip(range(-n, n + 1), centered_row(n))) for n in n_list]
    total = 0
    for combo in product(*rows):
        w = weight(*(k for k, _ in combo))
        if w:
            total += prod(c for _, c in combo) * w
    return total


def triple_vandermonde_sum(n: int) -> int:
    """sum_{i,j,k} C(2n,n+i) C(2n,n+j) C(2n,n+k) |(i^2-j^2)(i^2-k^2)(j^2-k^2)|."""
    _check_nonneg(n=n)
    row = centered_row(n)
    sq = [k * k for k in range(-n, n + 1)]
    total = 0
    for a, x in zip(row, sq):
        for b, y in zip(row, sq):
            xy = x - y
            if xy == 0:
                continue
            ab = a * b
            inner = 0
            for c, z in zip(row, sq):
                inner += c * abs((x - z) * (y - z))
            total += ab * abs(xy) * inner
    return total


def _check_nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")


class SumFamily(str, enum.Enum):
    SINGLE_S = "SINGLE_S"
    HALF_U = "HALF_U"
    DOUBLE_T = "DOUBLE_T"
    CENTERED = "CENTERED"
    GENERIC = "GENERIC"
    TRIPLE_VDM = "TRIPLE_VDM"
    UNRESTRICTED = "UNRESTRICTED"


@dataclass(frozen=True)
class SumSpec:
    family: SumFamily
    n: int = 0
    m: int = 0
    alpha: int = 1
    beta: int = 0
    n_list: Tuple[int, ...] = ()
    weight: Optional[WeightExpr] = None

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")
        _check_nonneg(beta=self.beta, n=self.n, m=self.m)
        if self.family is SumFamily.GENERIC:
            if self.weight is None:
                raise ValueError("GENERIC sums need a weight")
            if self.weight.arity != len(self.n_list):
                raise ValueError("weight arity does not match the number of dimensions")

    def evaluate(self) -> Union[int, Fraction]:
        f = self.family
        if f is SumFamily.SINGLE_S:
            return single_sum(self.beta, self.n)
        if f is SumFamily.HALF_U:
            return half_center_sum(self.beta, self.n)
        if f is SumFamily.DOUBLE_T:
            return double_diff_sum(self.beta, self.m, self.n)
        if f is SumFamily.CENTERED:
            return centered_double_sum(self.alpha, self.beta, self.n)
        if f is SumFamily.GENERIC:
            return generic_sum(self.n_list, self.weight)
        if f is SumFamily.TRIPLE_VDM:
            return triple_vandermonde_sum(self.n)
        return unrestricted_double_sum(self.beta, self.n)
