# src\conformal\predictor.py
import warnings
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.conformal.scorers import ConformityScorer
from src.distributions.params import derive_params
from src.exceptions import EmptyIntervalWarning, TiedScoresWarning
from src.models.data_models import CoverageParams, Dataset, PredictionInterval


class CalibratedPredictor(BaseModel):
    """A scorer plus its sorted calibration scores and the rank-b threshold."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scorer: ConformityScorer
    params: CoverageParams
    sorted_scores: np.ndarray
    threshold: float
    tie_flag: bool

    @field_validator("sorted_scores", mode="before")
    @classmethod
    def _freeze(cls, v):
        arr = np.array(v, dtype=float)
        if arr.ndim != 1 or np.any(np.isnan(arr)):
            raise ValueError("sorted_scores must be a one-dimensional sequence without NaN")
        if np.any(np.diff(arr) < 0):
            raise ValueError("sorted_scores must be nondecreasing")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_threshold(self):
        if self.sorted_scores.shape[0] != self.params.n:
            raise ValueError(f"expected {self.params.n} scores, got {self.sorted_scores.shape[0]}")
        if self.threshold != self.sorted_scores[self.params.b - 1]:
            raise ValueError("threshold must be the rank-b calibration score")
        return self


def calibrate(scorer: ConformityScorer, calib: Dataset, alpha: float) -> CalibratedPredictor:
    params = derive_params(calib.rows, alpha)
    ordered = np.sort(scorer.scores(calib.predictors, calib.response))
    if np.any(np.isnan(ordered)):
        raise ValueError("calibration scores contain NaN")
    tie_flag = bool(np.any(np.diff(ordered) == 0))
    if tie_flag:
        warnings.warn(
            "calibration scores contain exact ties; the coverage laws assume distinct scores",
            TiedScoresWarning,
            stacklevel=2,
        )
    return CalibratedPredictor(
        scorer=scorer,
        params=params,
        sorted_scores=ordered,
        threshold=float(ordered[params.b - 1]),
        tie_flag=tie_flag,
    )


def predict_intervals(cp: CalibratedPredictor, predictors) -> Tuple[np.ndarray, np.ndarray]:
    """Open intervals (lower, upper) for every row; warns once if any is empty."""
    lower, upper = cp.scorer.bounds(np.atleast_2d(np.asarray(predictors, dtype=float)), cp.threshold)
    empty = int(np.count_nonzero(upper <= lower))
    if empty:
        warnings.warn(f"{empty} prediction interval(s) are empty", EmptyIntervalWarning, stacklevel=2)
    return lower, upper


def predict_interval(cp: CalibratedPredictor, x) -> PredictionInterval:
    lower, upper = predict_intervals(cp, np.asarray(x, dtype=float).reshape(1, -1))
    return PredictionInterval(lower=float(lower[0]), upper=float(upper[0]))


def coverage_indicators(cp: CalibratedPredictor, future: Dataset) -> np.ndarray:
    """Z_i = 1 iff score(x_i, y_i) < threshold."""
    future_scores = cp.scorer.scores(future.predictors, future.response)
    return (future_scores < cp.threshold).astype(np.uint8)


def future_coverage(indicators: Sequence[int]) -> Fraction:
    bits = np.asarray(indicators)
    if bits.size == 0:
        raise ValueError("future coverage needs at least one indicator")
    if not np.all((bits == 0) | (bits == 1)):
        raise ValueError("indicators must be 0 or 1")
    return Fraction(int(np.count_nonzero(bits)), int(bits.size))
