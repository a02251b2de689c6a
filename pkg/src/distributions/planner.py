# src\distributions\planner.py
"""
Calibration-size planning.

The smallest n whose coverage law puts probability at least gamma on the
band (1 - alpha - epsilon, 1 - alpha + epsilon]. The ceil/floor split of
(n + 1) makes the objective jump up and down in n, so the scan is linear and
returns the first hit. With step > 1 only multiples of step are tried; a
step of 10 gives the rounded sizes usually quoted for this criterion
(n = 860 rather than the exact minimum 854 at alpha=0.1, epsilon=0.02,
gamma=0.95).
"""

import math
from typing import Optional

from src.distributions.finite_horizon import finite_horizon_pmf, pmf_cdf
from src.distributions.limit import limit_cdf, limit_distribution
from src.distributions.params import derive_params, min_calibration_size
from src.exceptions import PlanNotFound
from src.models.data_models import CoverageParams, decimal_fraction
from src.utils.validators import validate_alpha, validate_positive_int, validate_unit_open

DEFAULT_N_MAX = 10**6


def concentration_probability(
    params: CoverageParams, epsilon: float, horizon: Optional[int] = None
) -> float:
    """H(1 - alpha + eps) - H(1 - alpha - eps) under the Beta limit, or under C_m when horizon is set."""
    eps = decimal_fraction(epsilon)
    hi, lo = params.lower_bound + eps, params.lower_bound - eps
    if horizon is None:
        dist = limit_distribution(params)
        return limit_cdf(dist, float(hi)) - limit_cdf(dist, float(lo))
    pmf = finite_horizon_pmf(params, horizon)
    return pmf_cdf(pmf, hi) - pmf_cdf(pmf, lo)


def plan_calibration_size(
    alpha: float,
    epsilon: float,
    gamma: float,
    n_max: int = DEFAULT_N_MAX,
    horizon: Optional[int] = None,
    step: int = 1,
) -> int:
    validate_alpha(alpha)
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    validate_unit_open(gamma, "gamma")
    validate_positive_int(n_max, "n_max")
    validate_positive_int(step, "step")
    if horizon is not None:
        validate_positive_int(horizon, "horizon")

    # floor(alpha (n + 1)) is nondecreasing, so every n below this has g = 0
    start = math.ceil(min_calibration_size(alpha) / step) * step
    for n in range(start, n_max + 1, step):
        params = derive_params(n, alpha)
        if concentration_probability(params, epsilon, horizon) >= gamma:
            return n
    raise PlanNotFound(alpha, epsilon, gamma, n_max)
