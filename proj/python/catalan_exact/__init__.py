"""Exact Catalan-number toolkit.

Four independent generators for the sequence, an exact truncated
power-series engine for the identities the sequence satisfies, verified
growth bounds with root/ratio radius estimators, and discriminant-based
singularity location for w-quadratic curves. All sequence and series
arithmetic is exact; floats appear only in the estimator outputs.
"""

from ._core import (
    __version__,
    asymptotic_ratio,
    catalan_table,
    closed_form,
    cross_validate,
    discriminant,
    evaluate_curve,
    even_binomial_sum,
    fixed_point_series,
    functional_equation_residual,
    locate_singularity,
    minimal_inductive_constant,
    radius_estimate,
    ratio_test,
    rational_roots,
    regular_point_check,
    root_test,
    sqrt_formula_series,
    verify_lower_central_binomial,
    verify_lower_touchard,
    verify_segner_upper_bound,
    verify_touchard_derivation,
    verify_upper_bound_induction,
)

__all__ = [
    "__version__",
    "asymptotic_ratio",
    "catalan_table",
    "closed_form",
    "cross_validate",
    "discriminant",
    "evaluate_curve",
    "even_binomial_sum",
    "fixed_point_series",
    "functional_equation_residual",
    "locate_singularity",
    "minimal_inductive_constant",
    "radius_estimate",
    "ratio_test",
    "rational_roots",
    "regular_point_check",
    "root_test",
    "sqrt_formula_series",
    "verify_lower_central_binomial",
    "verify_lower_touchard",
    "verify_segner_upper_bound",
    "verify_touchard_derivation",
    "verify_upper_bound_induction",
]
