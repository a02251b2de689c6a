# src\conformal\scorers.py
"""
Conformity scorers.

Each variant holds only models fitted on the training split, never
calibration or future data. Besides the scores, a scorer knows the interval
{y : score(x, y) < s} for a threshold s, which is what makes membership in a
prediction interval equivalent to the strict score comparison.
"""

from typing import Annotated, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.exceptions import BadHyperparameter, DispersionNotPositive
from src.models.data_models import Dataset, ModelSpec, ScorerKind
from src.models.regressors import FittedModel, fit


class _Scorer(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class StandardScorer(_Scorer):
    """Absolute residual |y - psi(x)|."""

    kind: Literal["standard"] = "standard"
    psi: FittedModel

    def scores(self, predictors, response) -> np.ndarray:
        return np.abs(np.asarray(response, dtype=float) - self.psi.predict_many(predictors))

    def bounds(self, predictors, threshold: float) -> Tuple[np.ndarray, np.ndarray]:
        center = self.psi.predict_many(predictors)
        return center - threshold, center + threshold


class LocallyWeightedScorer(_Scorer):
    """Absolute residual scaled by a dispersion estimate, |y - psi(x)| / sigma(x)."""

    kind: Literal["locally_weighted"] = "locally_weighted"
    psi: FittedModel
    sigma: FittedModel

    def _dispersion(self, predictors) -> np.ndarray:
        sigma = self.sigma.predict_many(predictors)
        if np.any(sigma <= 0):
            raise DispersionNotPositive(
                f"dispersion estimate must be positive, got min {float(np.min(sigma))!r}"
            )
        return sigma

    def scores(self, predictors, response) -> np.ndarray:
        sigma = self._dispersion(predictors)
        residual = np.abs(np.asarray(response, dtype=float) - self.psi.predict_many(predictors))
        return residual / sigma

    def bounds(self, predictors, threshold: float) -> Tuple[np.ndarray, np.ndarray]:
        sigma = self._dispersion(predictors)
        center = self.psi.predict_many(predictors)
        return center - threshold * sigma, center + threshold * sigma


class CQRScorer(_Scorer):
    """Conformalized quantile regression, max{xi_lo(x) - y, y - xi_hi(x)}.

    Negative inside the quantile band; equals |y - psi(x)| when xi_lo = xi_hi = psi.
    """

    kind: Literal["cqr"] = "cqr"
    xi_lo: FittedModel
    xi_hi: FittedModel

    def scores(self, predictors, response) -> np.ndarray:
        y = np.asarray(response, dtype=float)
        return np.maximum(self.xi_lo.predict_many(predictors) - y, y - self.xi_hi.predict_many(predictors))

    def bounds(self, predictors, threshold: float) -> Tuple[np.ndarray, np.ndarray]:
        return (
            self.xi_lo.predict_many(predictors) - threshold,
            self.xi_hi.predict_many(predictors) + threshold,
        )


ConformityScorer = Annotated[
    Union[StandardScorer, LocallyWeightedScorer, CQRScorer], Field(discriminator="kind")
]


def score(scorer: ConformityScorer, x, y: float) -> float:
    X = np.asarray(x, dtype=float).reshape(1, -1)
    return float(scorer.scores(X, [y])[0])


def scores(scorer: ConformityScorer, predictors, response) -> np.ndarray:
    return scorer.scores(predictors, response)


def build_scorer(
    kind: ScorerKind,
    model_spec: ModelSpec,
    train: Dataset,
    alpha: float,
    quantile_levels: Optional[Tuple[float, float]] = None,
) -> ConformityScorer:
    """Fit the models a scorer of the given kind needs, on the training split only."""
    if kind == "standard":
        return StandardScorer(psi=fit(model_spec, train))

    neighbors = model_spec.k if model_spec.kind != "constant_mean" else train.rows
    neighbors = min(neighbors, train.rows)

    if kind == "locally_weighted":
        sigma = fit(ModelSpec(kind="knn_dispersion", k=neighbors, base=model_spec), train)
        return LocallyWeightedScorer(psi=sigma.base, sigma=sigma)

    if kind == "cqr":
        p_lo, p_hi = quantile_levels or (alpha / 2, 1 - alpha / 2)
        if not p_lo <= p_hi:
            raise BadHyperparameter(f"quantile levels must satisfy p_lo <= p_hi, got {p_lo}, {p_hi}")
        return CQRScorer(
            xi_lo=fit(ModelSpec(kind="knn_quantile", k=neighbors, p=p_lo), train),
            xi_hi=fit(ModelSpec(kind="knn_quantile", k=neighbors, p=p_hi), train),
        )

    raise BadHyperparameter(f"unknown scorer kind {kind!r}")
