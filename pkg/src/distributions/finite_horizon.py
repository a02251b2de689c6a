# src\distributions\finite_horizon.py
"""
Exact law of the future coverage C_m over a horizon of m observations.

m * C_m follows the beta-binomial law of the Polya urn that starts with b
black and g gray balls:

    P(C_m = k/m) = C(m, k) B(b + k, g + m - k) / B(b, g),   k = 0..m

The k = 0 term carries positive mass and is required for normalization.
All terms are evaluated in log space with scipy's log-beta, so horizons in
the hundreds of thousands neither overflow nor underflow.
"""

import math
from fractions import Fraction
from typing import Union

import numpy as np
from scipy.special import betaln, logsumexp

from src.models.data_models import CoverageParams, FiniteHorizonPmf, decimal_fraction
from src.utils.validators import validate_positive_int


def log_binomial_coefficient(m: int, k: np.ndarray) -> np.ndarray:
    return -np.log(m + 1.0) - betaln(k + 1.0, m - k + 1.0)


def finite_horizon_pmf(params: CoverageParams, m: int) -> FiniteHorizonPmf:
    validate_positive_int(m, "m")
    k = np.arange(m + 1, dtype=float)
    b, g = float(params.b), float(params.g)
    log_probs = log_binomial_coefficient(m, k) + betaln(b + k, g + m - k) - betaln(b, g)
    # betaln differences at large n or m drift off normalization by ~1e-10
    log_probs -= logsumexp(log_probs)
    return FiniteHorizonPmf(params=params, m=m, log_probs=log_probs)


def pmf_probabilities(pmf: FiniteHorizonPmf) -> np.ndarray:
    return pmf.probabilities


def pmf_mean(pmf: FiniteHorizonPmf) -> float:
    """E[C_m]; equals b / (n + 1) for every horizon."""
    return math.fsum(pmf.support * pmf.probabilities)


def pmf_variance(pmf: FiniteHorizonPmf) -> float:
    mean = pmf_mean(pmf)
    return math.fsum((pmf.support - mean) ** 2 * pmf.probabilities)


def pmf_cdf(pmf: FiniteHorizonPmf, t: Union[float, Fraction], inclusive: bool = True) -> float:
    """P(C_m <= t), or P(C_m < t) when inclusive is False.

    A float t is read as its shortest decimal, so 0.29 includes k/m = 29/100.
    """
    scaled = decimal_fraction(t) * pmf.m
    last = math.floor(scaled) if inclusive else math.ceil(scaled) - 1
    if last < 0:
        return 0.0
    return min(1.0, math.fsum(pmf.probabilities[: last + 1]))
