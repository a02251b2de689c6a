# src/exceptions.py
"""
Exceptions and warnings raised by covplan.

Domain failures derive from CoverageError (CLI exit status 2); malformed
input derives from InputValidationError (CLI exit status 1).
"""


class CoverageError(Exception):
    """Base class for failures that follow from the statistics, not the input format."""


class DegenerateCalibration(CoverageError):
    """floor(alpha * (n + 1)) == 0: the rank-b calibration score does not exist."""

    def __init__(self, n: int, alpha: float, min_n: int):
        self.n = n
        self.alpha = alpha
        self.min_n = min_n
        super().__init__(
            f"calibration size n={n} is too small for alpha={alpha}: "
            f"need n >= {min_n}"
        )


class PlanNotFound(CoverageError):
    def __init__(self, alpha: float, epsilon: float, gamma: float, n_max: int):
        self.n_max = n_max
        super().__init__(
            f"no calibration size n <= {n_max} reaches probability {gamma} "
            f"within +/-{epsilon} of {1 - alpha:g}"
        )


class OracleTooLarge(CoverageError):
    def __init__(self, m: int, limit: int):
        super().__init__(f"exact urn oracle is limited to m <= {limit}, got m={m}")


class DispersionNotPositive(CoverageError):
    """The dispersion model returned sigma(x) <= 0, so the weighted score is undefined."""


class InputValidationError(ValueError):
    """Base class for malformed user input."""


class BadHyperparameter(InputValidationError):
    pass


class SchemaMismatch(InputValidationError):
    pass


class TiedScoresWarning(UserWarning):
    """Calibration scores contain exact duplicates; the coverage laws assume distinct scores."""


class EmptyIntervalWarning(UserWarning):
    """A prediction interval has upper <= lower and covers nothing."""
