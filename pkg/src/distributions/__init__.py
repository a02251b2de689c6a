# src\distributions\__init__.py
"""Exact finite-horizon and limiting laws of the future coverage, and the planner."""

from src.distributions.params import derive_params, min_calibration_size
from src.distributions.finite_horizon import (
    finite_horizon_pmf,
    pmf_cdf,
    pmf_mean,
    pmf_probabilities,
    pmf_variance,
)
from src.distributions.limit import (
    limit_cdf,
    limit_cdf_betainc,
    limit_distribution,
    limit_moments,
    limit_normal_approx,
    limit_pdf,
    limit_quantile,
)
from src.distributions.planner import (
    DEFAULT_N_MAX,
    concentration_probability,
    plan_calibration_size,
)

__all__ = [
    'derive_params', 'min_calibration_size',
    'finite_horizon_pmf', 'pmf_cdf', 'pmf_mean', 'pmf_probabilities', 'pmf_variance',
    'limit_cdf', 'limit_cdf_betainc', 'limit_distribution', 'limit_moments',
    'limit_normal_approx', 'limit_pdf', 'limit_quantile',
    'DEFAULT_N_MAX', 'concentration_probability', 'plan_calibration_size',
]
