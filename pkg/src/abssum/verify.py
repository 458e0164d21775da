"""Identity campaigns, OEIS-style sequence output and oracle/closed-form timing."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from . import closed_forms as cf
from .closed_forms import ClosedFormUndefined, IdentityTag
from .exact import interpolate
from .oracle import (centered_double_sum, double_diff_sum, generic_sum, mixed_power_sum,
                     single_sum, triple_vandermonde_sum, unrestricted_double_sum)
from .report import VerificationReport
from .weights import parse_weight

DOUBLE_N_MAX = 400
TRIPLE_N_MAX = 60
GENERIC_POINTS_MAX = 10 ** 8


class RangeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    params: Tuple[str, ...]
    oracle: Callable[..., int]
    closed: Callable[..., int]
    guard: Callable[..., None]
    predicate: str = "equal"


def _double_guard(**p):
    for key in ("n", "m"):
        if p.get(key, 0) > DOUBLE_N_MAX:
            raise RangeGuardError(f"double sums are limited to {key} <= {DOUBLE_N_MAX}")


def _triple_guard(n, **_):
    if n > TRIPLE_N_MAX:
        raise RangeGuardError(f"triple sums are limited to n <= {TRIPLE_N_MAX}")


def _generic_guard(n, **_):
    if (2 * n + 1) ** 2 > GENERIC_POINTS_MAX:
        raise RangeGuardError("generic sum exceeds the point budget")


def _single_guard(**_):
    pass


def _o_family(ident: int) -> Family:
    weight = parse_weight(cf.O_WEIGHTS[ident], 2)
    return Family(("n",),
                  lambda n: generic_sum([n, n], weight),
                  lambda n: cf.o_family_closed(ident, n),
                  _generic_guard)


FAMILIES: Dict[IdentityTag, Family] = {
    IdentityTag.BEST: Family(("n",), lambda n: single_sum(1, n), cf.best_closed, _single_guard),
    IdentityTag.TUENTER_S: Family(("beta", "n"), single_sum, cf.tuenter_closed, _single_guard),
    IdentityTag.T_REDUCTION: Family(("beta", "m", "n"), double_diff_sum,
                                    cf.reduced_double_closed, _double_guard),
    IdentityTag.T_UNRESTRICTED: Family(("beta", "n"), unrestricted_double_sum,
                                       single_sum, _double_guard),
    IdentityTag.W1: Family(("n",), lambda n: centered_double_sum(2, 1, n),
                           cf.w1_closed, _double_guard),
    IdentityTag.W_ODD: Family(("k", "n"), lambda k, n: centered_double_sum(2, 2 * k + 1, n),
                              cf.w_odd_closed, _double_guard),
    IdentityTag.W_EVEN: Family(("r", "n"), lambda r, n: centered_double_sum(2, 2 * r, n),
                               cf.w_even_closed, _double_guard),
    IdentityTag.TRIPLE: Family(("n",), triple_vandermonde_sum, cf.triple_closed, _triple_guard),
    IdentityTag.S_ALPHA1: Family(("alpha", "n"), lambda alpha, n: centered_double_sum(alpha, 1, n),
                                 cf.s_alpha1_closed, _double_guard),
    IdentityTag.INEQ_BOUND: Family(("m", "n"), lambda m, n: mixed_power_sum(2, 1, m, n),
                                   cf.ineq_lower_bound, _double_guard, predicate="ineq"),
}
for _i in range(1, 6):
    FAMILIES[IdentityTag(f"O{_i}")] = _o_family(_i)


def _as_tag(family: Union[str, IdentityTag]) -> IdentityTag:
    try:
        return IdentityTag(family.upper() if isinstance(family, str) else family)
    except ValueError:
        raise ValueError(f"unknown family {family!r}") from None


def _as_values(v) -> List[int]:
    if isinstance(v, int):
        return [v]
    return list(v)


def verify_identity(family: Union[str, IdentityTag], **ranges: Iterable[int]) -> VerificationReport:
    """Evaluate oracle and closed form at every point of the parameter grid.

    ``ranges`` maps each parameter of the family to an int or an iterable of
    ints. INEQ_BOUND passes when lhs > rhs for m != n and lhs == rhs for m == n.
    """
    tag = _as_tag(family)
    fam = FAMILIES[tag]
    missing = set(fam.params) - set(ranges)
    extra = set(ranges) - set(fam.params)
    if missing or extra:
        raise ValueError(f"{tag.value} takes parameters {fam.params}; "
                         f"missing {sorted(missing)}, unexpected {sorted(extra)}")
    grids = [_as_values(ranges[p]) for p in fam.params]
    points = [dict(zip(fam.params, combo)) for combo in product(*grids)]
    for p in points:
        fam.guard(**p)
    report = VerificationReport(tag.value)
    for p in points:
        lhs = fam.oracle(**p)
        try:
            rhs = fam.closed(**p)
        except ClosedFormUndefined as exc:
            report.add(p, lhs, None, True, f"closed form undefined at this n: {exc}")
            continue
        if fam.predicate == "ineq":
            if p["m"] == p["n"]:
                report.add(p, lhs, rhs, lhs == rhs, "equality")
            else:
                report.add(p, lhs, rhs, lhs > rhs, "strict")
        else:
            report.add(p, lhs, rhs, lhs == rhs)
    return report


# -- conjecture check ---------------------------------------------------------

def even_integrality_check(r_max: int) -> VerificationReport:
    """Interpolate 2^(r-4n) W_{2r}(n) in n and test that all coefficients are integers.

    This is a check of an open conjecture: a failing instance is a finding.
    """
    report = VerificationReport("W_EVEN_INTEGRALITY")
    for r in range(r_max + 1):
        def scaled(n):
            return Fraction(centered_double_sum(2, 2 * r, n)) * Fraction(2) ** (r - 4 * n)
        poly = interpolate([(n, scaled(n)) for n in range(2 * r + 1)])
        extra = 2 * r + 1
        extrapolates = poly(extra) == scaled(extra)
        integral = poly.has_integer_coeffs()
        note = "coefficients: " + ", ".join(str(c) for c in poly.coeffs)
        if not extrapolates:
            note += f"; does not extrapolate to n={extra}"
        report.add({"r": r}, poly.degree, 2 * r, integral and extrapolates and poly.degree == 2 * r, note)
    return report


# -- sequences ----------------------------------------------------------------

# (alpha, beta) for each centered double-sum family. The S_{1,1} values match
# A166337 only after dropping that entry's n = 0 term.
SEQUENCE_FAMILIES = {
    "S11": (1, 1), "S21": (2, 1),
    "S12e": (1, 2), "S22e": (2, 2),
    "S13e": (1, 3), "S23e": (2, 3),
    "S14e": (1, 4), "S24e": (2, 4),
}

OEIS_IDS = {
    "S11": "A166337 (from n = 1)", "S21": "A254408",
    "S12e": "A268147", "S22e": "A268148", "S13e": "A268149",
    "S23e": "A268150", "S14e": "A268151", "S24e": "A268152",
}

SEQ_N_MAX = 20


def sequence_values(family: str, n_max: int) -> List[Tuple[int, int]]:
    if family not in SEQUENCE_FAMILIES:
        raise ValueError(f"unknown sequence family {family!r}; "
                         f"choose from {', '.join(SEQUENCE_FAMILIES)}")
    if not 0 <= n_max <= SEQ_N_MAX:
        raise RangeGuardError(f"n_max must be in [0, {SEQ_N_MAX}]")
    alpha, beta = SEQUENCE_FAMILIES[family]
    return [(n, centered_double_sum(alpha, beta, n)) for n in range(n_max + 1)]


def emit_sequence(family: str, n_max: int, fmt: str = "bfile") -> str:
    values = sequence_values(family, n_max)
    if fmt == "bfile":
        return "\n".join(f"{n} {v}" for n, v in values)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows((n, str(v)) for n, v in values)
        return buf.getvalue().rstrip("\n")
    if fmt == "jsonl":
        return "\n".join(json.dumps({"family": family, "n": n, "value": str(v)})
                         for n, v in values)
    raise ValueError(f"unknown format {fmt!r}")


# -- benchmarks ---------------------------------------------------------------

@dataclass
class BenchRecord:
    family: str
    params: dict
    calibration_n: int
    oracle_seconds: float
    closed_seconds: float
    equal: bool

    @property
    def speedup(self) -> float:
        return self.oracle_seconds / self.closed_seconds if self.closed_seconds else float("inf")

    def as_dict(self) -> dict:
        return {"family": self.family, "params": self.params,
                "calibration_n": self.calibration_n,
                "oracle_seconds": self.oracle_seconds,
                "closed_seconds": self.closed_seconds,
                "speedup": self.speedup, "equal": self.equal}


class BenchMismatch(AssertionError):
    pass


def _best_time(fn: Callable[[], int], repetitions: int) -> Tuple[float, int]:
    best, value = float("inf"), None
    for _ in range(repetitions):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def bench(family: Union[str, IdentityTag], n: int, repetitions: int = 3,
          **params: int) -> BenchRecord:
    """Time oracle against closed form at size n (best of ``repetitions``).

    Values are first compared at n_cal = min(n, 50); a mismatch aborts.
    """
    tag = _as_tag(family)
    fam = FAMILIES[tag]
    if "n" not in fam.params:
        raise ValueError(f"{tag.value} has no size parameter n")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    full = dict(params, n=n)
    fam.guard(**full)
    n_cal = min(n, 50)
    cal = dict(params, n=n_cal)
    lhs, rhs = fam.oracle(**cal), fam.closed(**cal)
    if lhs != rhs:
        raise BenchMismatch(f"{tag.value} {cal}: oracle {lhs} != closed form {rhs}")
    t_oracle, v_oracle = _best_time(lambda: fam.oracle(**full), repetitions)
    t_closed, v_closed = _best_time(lambda: fam.closed(**full), repetitions)
    return BenchRecord(tag.value, full, n_cal, t_oracle, t_closed, v_oracle == v_closed)


def parse_range(text: str) -> List[int]:
    """'3' -> [3]; '0:10' -> 0..10 inclusive; '1,4,7' -> [1, 4, 7]."""
    out: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            lo, hi = part.split(":")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def default_campaign() -> List[Tuple[str, Dict[str, Sequence[int]]]]:
    """Campaigns run by ``verify --family ALL``."""
    r = range
    return [
        ("BEST", {"n": r(0, 13)}),
        ("TUENTER_S", {"beta": r(0, 11), "n": r(0, 13)}),
        ("T_REDUCTION", {"beta": r(0, 7), "m": r(0, 13), "n": r(0, 13)}),
        ("T_UNRESTRICTED", {"beta": r(0, 5), "n": r(0, 13)}),
        ("W1", {"n": r(0, 31)}),
        ("W_ODD", {"k": r(0, 7), "n": r(1, 13)}),
        ("W_EVEN", {"r": r(0, 6), "n": r(0, 13)}),
        ("TRIPLE", {"n": r(0, 11)}),
        ("S_ALPHA1", {"alpha": r(1, 9), "n": r(0, 13)}),
        *((f"O{i}", {"n": r(0, 13)}) for i in range(1, 6)),
        ("INEQ_BOUND", {"m": r(0, 13), "n": r(0, 13)}),
    ]
