# src\distributions\limit.py
"""
Beta(b, g) limit of the future coverage as the horizon grows.

Both shape parameters are integers with b + g - 1 = n, so the regularized
incomplete beta I_t(b, g) is the binomial tail P(Binomial(n, t) >= b). That
sum is the production CDF; scipy's betainc is kept as an independent path.
"""

import math
from fractions import Fraction
from typing import Tuple

import numpy as np
from scipy.special import betainc, betaincinv, betaln

from src.distributions.finite_horizon import log_binomial_coefficient
from src.models.data_models import CoverageParams, LimitDistribution
from src.utils.validators import validate_alpha, validate_positive_int, validate_unit_open


def limit_distribution(params: CoverageParams) -> LimitDistribution:
    return LimitDistribution(params=params)


def _check_finite(t: float):
    if not math.isfinite(t):
        raise ValueError(f"t must be a finite number, got {t!r}")


def _binomial_terms(n: int, t: float, j: np.ndarray) -> np.ndarray:
    return np.exp(log_binomial_coefficient(n, j) + j * math.log(t) + (n - j) * math.log1p(-t))


def limit_cdf(dist: LimitDistribution, t: float) -> float:
    """H_{n,alpha}(t) = P(C_inf <= t) = sum_{j=b..n} C(n,j) t^j (1-t)^(n-j).

    Above the mean b/(n+1) the complement 1 - sum_{j<b} is summed instead, so
    the CDF stays nondecreasing where it approaches 1.
    """
    _check_finite(t)
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    n, b = dist.params.n, dist.b
    if t * (n + 1) <= b:
        upper = _binomial_terms(n, t, np.arange(b, n + 1, dtype=float))
        return min(1.0, math.fsum(upper))
    lower = _binomial_terms(n, t, np.arange(0, b, dtype=float))
    return max(0.0, 1.0 - math.fsum(lower))


def limit_cdf_betainc(dist: LimitDistribution, t: float) -> float:
    _check_finite(t)
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    return float(betainc(dist.b, dist.g, t))


def limit_pdf(dist: LimitDistribution, t: float) -> float:
    validate_unit_open(t, "t")
    log_density = (
        (dist.b - 1) * math.log(t) + (dist.g - 1) * math.log1p(-t) - betaln(dist.b, dist.g)
    )
    return math.exp(log_density)


def limit_moments(dist: LimitDistribution) -> Tuple[Fraction, Fraction]:
    """Exact (mean, variance) = (b/(n+1), b g / ((n+1)^2 (n+2)))."""
    n, b, g = dist.params.n, dist.b, dist.g
    return Fraction(b, n + 1), Fraction(b * g, (n + 1) ** 2 * (n + 2))


def limit_quantile(dist: LimitDistribution, q: float) -> float:
    validate_unit_open(q, "q")
    return float(betaincinv(dist.b, dist.g, q))


def limit_normal_approx(n: int, alpha: float) -> Tuple[float, float]:
    """Asymptotic N(1 - alpha, alpha (1 - alpha) / n) approximation of C_inf."""
    validate_positive_int(n, "n")
    validate_alpha(alpha)
    return 1.0 - alpha, alpha * (1.0 - alpha) / n
