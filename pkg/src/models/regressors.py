# src\models\regressors.py
"""
Regression models behind the conformity scorers.

The coverage laws hold for any model fitted on the training split, so these
are deliberately small: a constant mean and k-nearest-neighbour mean,
quantile and dispersion estimators. Neighbours use Euclidean distance on raw
features; ties are broken by the lower training row index.
"""

from typing import Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.spatial.distance import cdist

from src.exceptions import BadHyperparameter, SchemaMismatch
from src.models.data_models import Dataset, ModelSpec

DISPERSION_FLOOR = 1e-8


class _Fitted(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def predict_many(self, predictors: np.ndarray) -> np.ndarray:
        raise NotImplementedError


class ConstantMean(_Fitted):
    mu: float
    dim: int

    def predict_many(self, predictors):
        X = _check_dim(predictors, self.dim)
        return np.full(X.shape[0], self.mu)


class _KnnModel(_Fitted):
    train: Dataset
    k: int = Field(ge=1)

    def neighbors(self, predictors: np.ndarray) -> np.ndarray:
        """Row indices of the k nearest training rows, nearest first."""
        X = _check_dim(predictors, self.train.dim)
        dist = cdist(X, self.train.predictors, metric="sqeuclidean")
        order = np.argsort(dist, axis=1, kind="stable")
        return order[:, : self.k]


class KnnMean(_KnnModel):
    def predict_many(self, predictors):
        idx = self.neighbors(predictors)
        return self.train.response[idx].mean(axis=1)


class KnnQuantile(_KnnModel):
    p: float

    def predict_many(self, predictors):
        idx = self.neighbors(predictors)
        # inverted_cdf is the lower (type-1) empirical quantile
        return np.quantile(self.train.response[idx], self.p, axis=1, method="inverted_cdf")


class KnnDispersion(_KnnModel):
    base: "FittedModel"
    abs_residuals: np.ndarray

    def predict_many(self, predictors):
        idx = self.neighbors(predictors)
        return np.maximum(self.abs_residuals[idx].mean(axis=1), DISPERSION_FLOOR)


FittedModel = Union[ConstantMean, KnnMean, KnnQuantile, KnnDispersion]
KnnDispersion.model_rebuild()


def _check_dim(predictors, dim: int) -> np.ndarray:
    X = np.atleast_2d(np.asarray(predictors, dtype=float))
    if X.shape[1] != dim:
        raise SchemaMismatch(f"model was fitted on {dim} features, got {X.shape[1]}")
    return X


def _check_k(spec: ModelSpec, train: Dataset) -> int:
    if not 1 <= spec.k <= train.rows:
        raise BadHyperparameter(f"k must lie in [1, {train.rows}], got {spec.k}")
    return spec.k


def fit(spec: ModelSpec, train: Dataset) -> FittedModel:
    """Fit a model on the training split only."""
    if spec.kind == "constant_mean":
        return ConstantMean(mu=float(np.mean(train.response)), dim=train.dim)

    k = _check_k(spec, train)
    if spec.kind == "knn_mean":
        return KnnMean(train=train, k=k)

    if spec.kind == "knn_quantile":
        if not 0.0 < spec.p < 1.0:
            raise BadHyperparameter(f"quantile level p must lie in (0, 1), got {spec.p}")
        return KnnQuantile(train=train, k=k, p=spec.p)

    if spec.kind == "knn_dispersion":
        base_spec = spec.base or ModelSpec(kind="knn_mean", k=spec.k)
        if base_spec.kind == "knn_dispersion":
            raise BadHyperparameter("the base of a dispersion model must be a point predictor")
        base = fit(base_spec, train)
        residuals = np.abs(train.response - base.predict_many(train.predictors))
        residuals.setflags(write=False)
        return KnnDispersion(train=train, k=k, base=base, abs_residuals=residuals)

    raise BadHyperparameter(f"unknown model kind {spec.kind!r}")


def predict(model: FittedModel, x) -> float:
    return float(model.predict_many(np.asarray(x, dtype=float).reshape(1, -1))[0])


def predict_many(model: FittedModel, predictors) -> np.ndarray:
    return model.predict_many(predictors)
