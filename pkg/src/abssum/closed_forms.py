"""Right-hand sides of the identities, evaluated without brute-force sums.

Every formula is computed over exact rationals and must come out integral;
a fractional result means the formula (or its transcription) is wrong and
raises :class:`InconsistencyError`. A formula that is not defined at the
requested point (a vanishing denominator) raises :class:`ClosedFormUndefined`.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Tuple

from .exact import binomial
from .gamma import omega
from .oracle import single_sum
from .tuenter import InconsistencyError, p_poly, q_poly


class ClosedFormUndefined(ArithmeticError):
    """The closed form has a pole (or 0/0) at the requested arguments."""


class IdentityTag(str, enum.Enum):
    BEST = "BEST"
    TUENTER_S = "TUENTER_S"
    T_REDUCTION = "T_REDUCTION"
    T_UNRESTRICTED = "T_UNRESTRICTED"
    W1 = "W1"
    W_ODD = "W_ODD"
    W_EVEN = "W_EVEN"
    TRIPLE = "TRIPLE"
    S_ALPHA1 = "S_ALPHA1"
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    O4 = "O4"
    O5 = "O5"
    INEQ_BOUND = "INEQ_BOUND"


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InconsistencyError(f"{what} evaluated to non-integer {value}")
    return int(value)


def _ratio(num: int, den: int, what: str) -> Fraction:
    if den == 0:
        raise ClosedFormUndefined(f"{what}: denominator vanishes")
    return Fraction(num, den)


def central(n: int) -> int:
    return binomial(2 * n, n)


def best_closed(n: int) -> int:
    """sum_k C(2n, n+k)|k| = n C(2n, n)."""
    return n * central(n)


def tuenter_closed(beta: int, n: int) -> int:
    """S_beta(n) from the P/Q polynomials (dispatching on the parity of beta)."""
    if beta < 0 or n < 0:
        raise ValueError("beta and n must be >= 0")
    half, odd = divmod(beta, 2)
    if odd:
        val = p_poly(half)(n) * n * central(n)
    else:
        val = q_poly(half)(n) * Fraction(2) ** (2 * n - half)
    return _as_int(val, f"S_{beta}({n})")


def reduced_double_closed(beta: int, m: int, n: int) -> int:
    """T_beta(m, n) = S_beta(m + n)."""
    if min(beta, m, n) < 0:
        raise ValueError("arguments must be >= 0")
    return single_sum(beta, m + n)


def w1_closed(n: int) -> int:
    return 2 * n * n * central(n) ** 2


def w_odd_closed(k: int, n: int) -> int:
    """W_{2k+1}(n) = omega_k(n) C(2n, n)^2."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    if n == 0:
        return 0
    try:
        w = omega(k)(n)
    except ZeroDivisionError as exc:
        raise ClosedFormUndefined(f"omega_{k} has a pole at n={n}") from exc
    return _as_int(w * central(n) ** 2, f"W_{2 * k + 1}({n})")


def w_even_routes(r: int, n: int) -> Tuple[int, int]:
    """W_{2r}(n) via products of S values and via products of Q polynomials."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be >= 0")
    s_route = sum((-1) ** k * binomial(2 * r, k)
                  * tuenter_closed(2 * k, n) * tuenter_closed(4 * r - 2 * k, n)
                  for k in range(2 * r + 1))
    q_sum = sum((-1) ** k * binomial(2 * r, k) * q_poly(k)(n) * q_poly(2 * r - k)(n)
                for k in range(2 * r + 1))
    q_route = _as_int(Fraction(2) ** (4 * n - 2 * r) * q_sum, f"W_{2 * r}({n}) Q-route")
    return s_route, q_route


def w_even_closed(r: int, n: int) -> int:
    s_route, q_route = w_even_routes(r, n)
    if s_route != q_route:
        raise InconsistencyError(
            f"W_{2 * r}({n}): S-route {s_route} != Q-route {q_route}")
    return s_route


def w_even_printed(r: int, n: int) -> int:
    """The four explicitly listed even cases W_0, W_2, W_4, W_6."""
    base = Fraction(2) ** (4 * n - r)
    lin = n * (2 * n - 1)
    if r == 0:
        val = base
    elif r == 1:
        val = base * lin
    elif r == 2:
        val = base * lin * (18 * n ** 2 - 33 * n + 17)
    elif r == 3:
        val = base * lin * (900 * n ** 4 - 4500 * n ** 3 + 8895 * n ** 2 - 8055 * n + 2764)
    else:
        raise ValueError("printed even cases exist only for r = 0..3")
    return _as_int(val, f"printed W_{2 * r}({n})")


def _p71(n: int) -> int:
    return 531 * n ** 5 - 1960 * n ** 4 + 2800 * n ** 3 - 1952 * n ** 2 + 668 * n - 90


def s_alpha1_factored(alpha: int, n: int) -> Tuple[Fraction, int]:
    """(rational factor, binomial factor) whose product is S_{alpha,1}(n), n >= 1.

    Even alpha uses C(2n, n)^2; odd alpha uses C(4n - c, 2n - c).
    """
    if not 1 <= alpha <= 8:
        raise ValueError(f"unsupported family: S_{{{alpha},1}} (alpha must be 1..8)")
    if n < 1:
        raise ClosedFormUndefined("factored forms are only used for n >= 1")
    what = f"S_{alpha},1({n})"
    c2 = central(n) ** 2
    if alpha == 1:
        return Fraction(2 * n), binomial(4 * n, 2 * n)
    if alpha == 2:
        return Fraction(2 * n * n), c2
    if alpha == 3:
        return _ratio(4 * n * n * (5 * n - 2), 4 * n - 1, what), binomial(4 * n - 1, 2 * n - 1)
    if alpha == 4:
        return _ratio(2 * n ** 3 * (4 * n - 3), 2 * n - 1, what), c2
    if alpha == 5:
        return (_ratio(8 * n * n * (43 * n ** 3 - 70 * n ** 2 + 36 * n - 6),
                       (4 * n - 2) * (4 * n - 3), what),
                binomial(4 * n - 2, 2 * n - 2))
    if alpha == 6:
        return _ratio(2 * n ** 3 * (11 * n * n - 15 * n + 5), 2 * n - 1, what), c2
    if alpha == 7:
        return (_ratio(16 * n * n * _p71(n), (4 * n - 3) * (4 * n - 4) * (4 * n - 5), what),
                binomial(4 * n - 3, 2 * n - 3))
    return (_ratio(2 * n ** 3 * (80 * n ** 4 - 306 * n ** 3 + 428 * n ** 2 - 266 * n + 63),
                   (2 * n - 1) * (2 * n - 3), what), c2)


def s_alpha1_closed(alpha: int, n: int) -> int:
    """S_{alpha,1}(n) for 1 <= alpha <= 8."""
    if not 1 <= alpha <= 8:
        raise ValueError(f"unsupported family: S_{{{alpha},1}} (alpha must be 1..8)")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    if alpha == 7 and n == 1:
        # the general formula holds only for n >= 2
        return 12
    factor, binom = s_alpha1_factored(alpha, n)
    return _as_int(factor * binom, f"S_{alpha},1({n})")


O_WEIGHTS = {
    1: "abs(i^2*(i^2-j^2))",
    2: "abs(i^4*(i^2-j^2))",
    3: "abs(i*j*(i^2-j^2))",
    4: "abs(i^2*j^2*(i^2-j^2))",
    5: "abs(i^3*j^3*(i^2-j^2))",
}


def o_family_closed(ident: int, n: int) -> int:
    if ident not in O_WEIGHTS:
        raise ValueError(f"unknown O identity {ident} (expected 1..5)")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    what = f"O{ident}({n})"
    if ident == 1:
        r = _ratio(n ** 3 * (4 * n - 3), 2 * n - 1, what)
    elif ident == 2:
        r = _ratio(n ** 3 * (10 * n * n - 14 * n + 5), 2 * n - 1, what)
    elif ident == 3:
        r = _ratio(2 * n ** 3 * (n - 1), 2 * n - 1, what)
    elif ident == 4:
        r = _ratio(2 * n ** 4 * (n - 1), 2 * n - 1, what)
    else:
        r = _ratio(2 * n ** 4 * (n - 1) * (3 * n * n - 6 * n + 2), (2 * n - 1) * (2 * n - 3), what)
    return _as_int(r * central(n) ** 2, what)


def triple_closed(n: int) -> int:
    """3 n^3 (n-1) C(2n, n)^2 2^(2n-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    return 3 * n ** 3 * (n - 1) * central(n) ** 2 * 2 ** (2 * n - 1)


def ineq_lower_bound(m: int, n: int) -> int:
    """2 m n C(2m, m) C(2n, n)."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be >= 0")
    return 2 * m * n * central(m) * central(n)
