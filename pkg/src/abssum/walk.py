"""Monte Carlo estimate of E|f(k_1, ..., k_d)| for symmetric Bernoulli walks.

Dimension i takes 2 n_i fair steps of +-1/2, so its endpoint is
k_i = (#up steps) - n_i and has law C(2 n_i, n_i + k_i) / 4^{n_i}. The exact
expectation is therefore generic_sum(n_list, f) / 4^{sum n_i}.

Random bits come from numpy's PCG64 seeded with ``seed``. Weight values are
accumulated as Python integers (grouping identical endpoints), so the only
floating-point step is the final division.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Optional, Sequence, Union

import numpy as np

from .oracle import MAX_GENERIC_DIMS, generic_size, generic_sum
from .weights import WeightExpr, parse_weight

EXACT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class WalkConfig:
    n_list: tuple
    weight: WeightExpr
    samples: int
    seed: int

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if len(self.n_list) != self.weight.arity:
            raise ValueError("weight arity does not match the number of dimensions")
        if len(self.n_list) > MAX_GENERIC_DIMS:
            raise ValueError(f"at most {MAX_GENERIC_DIMS} dimensions are supported")
        if any(n < 0 for n in self.n_list):
            raise ValueError("step counts must be non-negative")


@dataclass(frozen=True)
class EstimateResult:
    mean: float
    std_error: float
    exact: Optional[Fraction] = None

    def within(self, sigmas: float = 5.0) -> bool:
        if self.exact is None:
            raise ValueError("no exact value available")
        return abs(self.mean - float(self.exact)) <= sigmas * self.std_error


def make_config(n_list: Sequence[int], weight: Union[str, WeightExpr],
                samples: int = 100_000, seed: int = 0) -> WalkConfig:
    if isinstance(weight, str):
        weight = parse_weight(weight, len(n_list))
    return WalkConfig(tuple(n_list), weight, samples, seed)


def sample_endpoints(cfg: WalkConfig) -> np.ndarray:
    """(samples, d) array of endpoints, one column per dimension."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    cols = []
    for n in cfg.n_list:
        if n == 0:
            cols.append(np.zeros(cfg.samples, dtype=np.int64))
            continue
        steps = rng.integers(0, 2, size=(cfg.samples, 2 * n), dtype=np.int8)
        cols.append(steps.sum(axis=1, dtype=np.int64) - n)
    return np.stack(cols, axis=1)


def exact_expectation(n_list: Sequence[int], weight: WeightExpr) -> Fraction:
    return Fraction(generic_sum(n_list, weight), 4 ** sum(n_list))


def estimate_expectation(cfg: WalkConfig, with_exact: bool = True) -> EstimateResult:
    points = sample_endpoints(cfg)
    uniq, counts = np.unique(points, axis=0, return_counts=True)
    s1 = s2 = 0
    for row, c in zip(uniq.tolist(), counts.tolist()):
        w = cfg.weight(*row)
        s1 += c * w
        s2 += c * w * w
    N = cfg.samples
    mean = Fraction(s1, N)
    if N > 1:
        var = (Fraction(s2, N) - mean * mean) * Fraction(N, N - 1)
        se = sqrt(float(var) / N)
    else:
        se = 0.0
    exact = None
    if with_exact and generic_size(cfg.n_list) <= EXACT_BUDGET:
        exact = exact_expectation(cfg.n_list, cfg.weight)
    return EstimateResult(float(mean), se, exact)

