"""Base-(1+p) logarithms for regression interpretation."""

from relog._core import (
    audit,
    base_quality_scan,
    combined_traditional_error,
    crossover,
    delta_method_se,
    elasticity_recovery,
    error_curve_csv,
    exact_percent_change,
    exact_prop_change_x,
    fit,
    generic_base_error,
    inverse_transform,
    rescale_coefficient,
    rescale_coefficient_from_natural,
    rescaled_error,
    rescaled_zero_error,
    simulate,
    traditional_error,
    traditional_zero_error,
    transform,
    transform_asinh,
    transform_log1p,
)

__all__ = [
    "audit",
    "base_quality_scan",
    "combined_traditional_error",
    "crossover",
    "delta_method_se",
    "elasticity_recovery",
    "error_curve_csv",
    "exact_percent_change",
    "exact_prop_change_x",
    "fit",
    "generic_base_error",
    "inverse_transform",
    "rescale_coefficient",
    "rescale_coefficient_from_natural",
    "rescaled_error",
    "rescaled_zero_error",
    "simulate",
    "traditional_error",
    "traditional_zero_error",
    "transform",
    "transform_asinh",
    "transform_log1p",
]
