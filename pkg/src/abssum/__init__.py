"""Exact binomial sums whose summand carries an absolute-value weight.

Brute-force oracles, closed forms, the gamma/omega recurrence engine for odd
moments of |k^2 - l^2|, interpolated P/Q polynomials and a random-walk
Monte Carlo cross-check.
"""
from .closed_forms import (ClosedFormUndefined, IdentityTag, ineq_lower_bound,
                           o_family_closed, reduced_double_closed, s_alpha1_closed,
                           triple_closed, tuenter_closed, w_even_closed, w_odd_closed)
from .exact import Poly, RatFunc, Rational, binomial, interpolate, ratfunc_shift
from .gamma import g_consistency_check, g_table, gamma_funcs, omega
from .oracle import (SumFamily, SumSpec, centered_double_sum, double_diff_sum, generic_sum,
                     half_center_sum, single_sum, triple_vandermonde_sum,
                     unrestricted_double_sum)
from .report import VerificationReport
from .tuenter import InconsistencyError, p_poly, q_poly
from .verify import bench, emit_sequence, even_integrality_check, verify_identity
from .walk import WalkConfig, estimate_expectation, make_config
from .weights import WeightExpr, WeightSyntaxError, eval_weight, parse_weight

__version__ = "0.1.0"
