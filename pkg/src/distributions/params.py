# src\distributions\params.py
import math

from src.exceptions import DegenerateCalibration
from src.models.data_models import CoverageParams, alpha_fraction
from src.utils.validators import validate_alpha, validate_positive_int


def min_calibration_size(alpha: float) -> int:
    """Smallest n with floor(alpha * (n + 1)) >= 1."""
    return max(1, math.ceil(1 / alpha_fraction(alpha)) - 1)


def derive_params(n: int, alpha: float) -> CoverageParams:
    """Urn counts for calibration size n at miscoverage alpha.

    b = ceil((1 - alpha)(n + 1)) is the rank of the threshold score and
    g = floor(alpha (n + 1)) = n + 1 - b.
    """
    validate_positive_int(n, "n")
    validate_alpha(alpha)
    a = alpha_fraction(alpha)
    g = math.floor(a * (n + 1))
    if g == 0:
        raise DegenerateCalibration(n, alpha, min_calibration_size(alpha))
    b = math.ceil((1 - a) * (n + 1))
    return CoverageParams(n=n, alpha=alpha, b=b, g=g)
