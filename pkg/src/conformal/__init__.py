# src\conformal\__init__.py
"""Conformity scoring, calibration, prediction intervals and future coverage."""

from src.conformal.scorers import (
    CQRScorer,
    ConformityScorer,
    LocallyWeightedScorer,
    StandardScorer,
    build_scorer,
    score,
    scores,
)
from src.conformal.predictor import (
    CalibratedPredictor,
    calibrate,
    coverage_indicators,
    future_coverage,
    predict_interval,
    predict_intervals,
)

__all__ = [
    'CQRScorer', 'ConformityScorer', 'LocallyWeightedScorer', 'StandardScorer',
    'build_scorer', 'score', 'scores',
    'CalibratedPredictor', 'calibrate', 'coverage_indicators', 'future_coverage',
    'predict_interval', 'predict_intervals',
]
