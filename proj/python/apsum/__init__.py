"""Exact power sums over arithmetic progressions.

Everything is computed in exact rational arithmetic; values cross the
boundary as ``int`` / ``fractions.Fraction``.
"""

from apsum._core import (
    CostReport,
    IdentityFailure,
    IdentityReport,
    a_number,
    bernoulli_number,
    bernoulli_number_recurrence,
    bernoulli_poly_coeffs_binomial,
    bernoulli_poly_coeffs_stirling,
    bernoulli_poly_eval,
    binomial,
    coefficients,
    compare_costs,
    cost_profile,
    direct_sum,
    eval_binomial_form,
    eval_power_sum,
    factorial,
    identity_suite,
    pow_exact,
    r_stirling2,
    r_whitney,
    rational_from_string,
    stirling1,
    stirling1_explicit,
    stirling2,
    top_coefficient,
)

__all__ = [
    "CostReport",
    "IdentityFailure",
    "IdentityReport",
    "a_number",
    "bernoulli_number",
    "bernoulli_number_recurrence",
    "bernoulli_poly_coeffs_binomial",
    "bernoulli_poly_coeffs_stirling",
    "bernoulli_poly_eval",
    "binomial",
    "coefficients",
    "compare_costs",
    "cost_profile",
    "direct_sum",
    "eval_binomial_form",
    "eval_power_sum",
    "factorial",
    "identity_suite",
    "pow_exact",
    "r_stirling2",
    "r_whitney",
    "rational_from_string",
    "stirling1",
    "stirling1_explicit",
    "stirling2",
    "top_coefficient",
]

__version__ = "0.1.0"
