"""Recurrence machinery for the odd moments W_{2k+1}(n).

With f_0 = 1/2 and f_q = 1 otherwise,

    G_k(n, m) = sum_{q >= 0} C(2n, n+m+q) C(2n, n+q) (m + 2q)^(2k+1) f_q,
    W_{2k+1}(n) = 8 sum_{m >= 0} m^(2k+1) G_k(n, m).

G_k satisfies a four-term recurrence in k (with a shift in n). Dividing out
C(2n, n) C(2n, n+m) leaves g_k(n, m), an even polynomial in m whose
coefficients gamma_{k,j}(n) are rational functions of n. Summing those
against the P polynomials gives omega_k(n) = W_{2k+1}(n) / C(2n, n)^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .exact import N, Poly, RatFunc, binomial, interpolate, ratfunc_shift
from .report import VerificationReport
from .tuenter import InconsistencyError, p_poly


# -- numeric G tables ---------------------------------------------------------

def g_definition(k: int, n: int, m: int) -> Fraction:
    """G_k(n, m) summed straight from its definition."""
    if n <= 0:
        return Fraction(0)
    total = Fraction(0)
    for q in range(0, n + 1):
        term = binomial(2 * n, n + m + q) * binomial(2 * n, n + q) * (m + 2 * q) ** (2 * k + 1)
        total += Fraction(term, 2) if q == 0 else term
    return total


@dataclass
class GTable:
    k_max: int
    n_max: int
    m_max: int
    values: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int, int]) -> Fraction:
        k, n, m = key
        if n <= 0:
            return Fraction(0)
        return self.values[key]


def g_table(k_max: int, n_max: int, m_max: int) -> GTable:
    """Fill G_k(n, m) for k <= k_max, n <= n_max, m <= m_max by recurrence."""
    if min(k_max, n_max, m_max) < 0:
        raise ValueError("table bounds must be >= 0")
    table = GTable(k_max, n_max, m_max)
    vals = table.values
    for m in range(m_max + 1):
        for n in range(0, n_max + 1):
            if n == 0:
                for k in range(k_max + 1):
                    vals[k, 0, m] = Fraction(0)
                continue
            g0 = Fraction(n, 2) * binomial(2 * n, n) * binomial(2 * n, n + m)
            vals[0, n, m] = g0
            if k_max >= 1:
                vals[1, n, m] = Fraction(4 * n * n + (2 * n - 5) * m * m, 2 * n - 1) * g0
            a = 2 * (4 * n * n + m * m)
            b = (4 * n * n - m * m) ** 2
            c = 64 * n * n * (2 * n - 1) ** 2
            for k in range(k_max - 1):
                vals[k + 2, n, m] = (a * vals[k + 1, n, m] - b * vals[k, n, m]
                                     + c * table[k, n - 1, m])
    return table


def g_lower(k: int, n: int, m: int) -> Fraction:
    """g_k(n, m) for a single point, by its own recurrence (no G values used)."""
    return _g_lower(k, n, Fraction(m))


@lru_cache(maxsize=None)
def _g_lower(k: int, n: int, m: Fraction) -> Fraction:
    if n <= 0:
        return Fraction(0)
    if k == 0:
        return Fraction(n, 2)
    if k == 1:
        return (4 * n * n + (2 * n - 5) * m * m) / (2 * n - 1) * Fraction(n, 2)
    j = k - 2
    return (2 * (4 * n * n + m * m) * _g_lower(j + 1, n, m)
            - (4 * n * n - m * m) ** 2 * _g_lower(j, n, m)
            + 16 * n * n * (n * n - m * m) * _g_lower(j, n - 1, m))


# -- symbolic gamma_{k,j}(n) --------------------------------------------------

@dataclass(frozen=True)
class GammaTable:
    k: int
    entries: Tuple[RatFunc, ...]  # gamma_{k,0} .. gamma_{k,k}

    def __getitem__(self, j: int) -> RatFunc:
        if 0 <= j <= self.k:
            return self.entries[j]
        return RatFunc(0)


_ZERO = RatFunc(0)


@lru_cache(maxsize=None)
def gamma_funcs(k: int) -> GammaTable:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return GammaTable(0, (RatFunc(N * Fraction(1, 2)),))
    if k == 1:
        two_n_m1 = 2 * N - 1
        return GammaTable(1, (
            RatFunc(2 * N ** 3, two_n_m1),
            RatFunc(N * (2 * N - 5), 2 * two_n_m1),
        ))
    prev1 = gamma_funcs(k - 1)
    prev2 = gamma_funcs(k - 2)
    prev2_shift = [ratfunc_shift(prev2[j], -1) for j in range(k - 1)]

    def shifted(j):
        return prev2_shift[j] if 0 <= j < len(prev2_shift) else _ZERO

    n2, n4 = N ** 2, N ** 4
    entries = []
    for j in range(k + 1):
        val = (8 * n2 * prev1[j] + 2 * prev1[j - 1]
               - 16 * n4 * prev2[j] + 8 * n2 * prev2[j - 1] - prev2[j - 2]
               + 16 * n4 * shifted(j) - 16 * n2 * shifted(j - 1))
        entries.append(val)
    return GammaTable(k, tuple(entries))


def odd_product(count: int) -> Poly:
    """(2n-1)(2n-3)...(2n-(2*count-1))."""
    out = Poly.const(1)
    for i in range(1, count + 1):
        out = out * (2 * N - (2 * i - 1))
    return out


def gamma_denominator_divides(k: int) -> bool:
    bound = odd_product(k)
    return all((bound % g.den).is_zero() for g in gamma_funcs(k).entries)


# -- omega_k(n) ---------------------------------------------------------------

@dataclass(frozen=True)
class OmegaFunc:
    k: int
    omega: RatFunc

    def __call__(self, n) -> Fraction:
        return self.omega(n)

    @property
    def cleared(self) -> Poly:
        """omega_k(n) times (2n-1)(2n-3)...(2n-2*ceil(k/2)+1)."""
        r = (self.omega * odd_product(-(-self.k // 2)))
        if not r.is_poly():
            raise InconsistencyError(f"omega_{self.k} denominator is not cleared: {self.omega}")
        return r.num


@lru_cache(maxsize=None)
def omega(k: int) -> OmegaFunc:
    gt = gamma_funcs(k)
    total = RatFunc(0)
    for j in range(k + 1):
        total = total + gt[j] * p_poly(k + j)
    w = OmegaFunc(k, total * (4 * N))
    half = -(-k // 2)
    cleared = w.cleared
    if cleared.degree != 2 * k + half + 2:
        raise InconsistencyError(
            f"omega_{k} cleared degree {cleared.degree}, expected {2 * k + half + 2}")
    if not cleared.has_integer_coeffs():
        raise InconsistencyError(f"omega_{k} cleared polynomial is not over Z")
    return w


# -- consistency report -------------------------------------------------------

def g_consistency_check(k_max: int, n_max: int, m_max: int) -> VerificationReport:
    """Compare G by recurrence with C(2n,n) C(2n,n+m) g and check g is even in m."""
    report = VerificationReport("G_CONSISTENCY")
    table = g_table(k_max, n_max, m_max)
    for k in range(k_max + 1):
        for n in range(n_max + 1):
            for m in range(m_max + 1):
                lhs = table[k, n, m]
                rhs = binomial(2 * n, n) * binomial(2 * n, n + m) * g_lower(k, n, m)
                report.add({"k": k, "n": n, "m": m}, lhs, rhs, lhs == rhs)
            if n == 0:
                continue
            # exact fit in m through 2k+2 nodes; must be even of degree 2k
            poly = interpolate([(m, g_lower(k, n, m)) for m in range(2 * k + 2)])
            ok = poly.is_even() and poly.degree == 2 * k
            report.add({"k": k, "n": n}, poly.degree, 2 * k, ok,
                       "g even in m" if ok else f"g_{k}({n}, m) = {poly}")
    return report


def reassembled_w_odd(k: int, n: int) -> Fraction:
    """8 * sum_{m=0..n} m^(2k+1) G_k(n, m) using a recurrence-built table."""
    table = g_table(k, n, n)
    return 8 * sum((m ** (2 * k + 1) * table[k, n, m] for m in range(n + 1)), Fraction(0))

