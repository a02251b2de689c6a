# src\models\data_models.py
import math
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ScorerKind = Literal["standard", "locally_weighted", "cqr"]
ModelKind = Literal["constant_mean", "knn_mean", "knn_quantile", "knn_dispersion"]

NORMALIZATION_TOL = 1e-10


def decimal_fraction(value: float) -> Fraction:
    """Exact rational for a finite real, read through its shortest decimal representation."""
    if isinstance(value, Fraction):
        return value
    if not math.isfinite(value):
        raise ValueError(f"expected a finite number, got {value!r}")
    return Fraction(repr(float(value)))


def alpha_fraction(alpha: float) -> Fraction:
    return decimal_fraction(alpha)


def _frozen_array(values, ndim: int, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


class CoverageParams(BaseModel):
    """(n, alpha) with the derived urn counts b = ceil((1-alpha)(n+1)), g = floor(alpha(n+1))."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    alpha: float = Field(gt=0.0, lt=1.0)
    b: int = Field(ge=1)
    g: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_urn_counts(self):
        a = alpha_fraction(self.alpha)
        if self.g != math.floor(a * (self.n + 1)):
            raise ValueError(f"g={self.g} does not match floor(alpha*(n+1))")
        if self.b + self.g != self.n + 1:
            raise ValueError(f"b + g must equal n + 1, got {self.b} + {self.g}")
        return self

    @property
    def lower_bound(self) -> Fraction:
        """Marginal-validity lower bound 1 - alpha."""
        return 1 - alpha_fraction(self.alpha)

    @property
    def upper_bound(self) -> Fraction:
        return self.lower_bound + Fraction(1, self.n + 1)

    @property
    def expected_coverage(self) -> Fraction:
        return Fraction(self.b, self.n + 1)


class FiniteHorizonPmf(BaseModel):
    """Law of the future coverage C_m on k/m, k = 0..m, stored as log-probabilities."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: CoverageParams
    m: int = Field(ge=1)
    log_probs: np.ndarray

    @field_validator("log_probs", mode="before")
    @classmethod
    def _check_log_probs(cls, v):
        arr = np.array(v, dtype=float)
        if arr.ndim != 1 or not np.all(np.isfinite(arr)):
            raise ValueError("log_probs must be a finite one-dimensional sequence")
        if np.any(arr > 1e-12):
            raise ValueError("log_probs must be logs of probabilities in (0, 1]")
        arr = np.minimum(arr, 0.0)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_normalized(self):
        if self.log_probs.shape[0] != self.m + 1:
            raise ValueError(f"expected {self.m + 1} log-probabilities, got {self.log_probs.shape[0]}")
        total = math.fsum(np.exp(self.log_probs))
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        return self

    @property
    def probabilities(self) -> np.ndarray:
        return np.exp(self.log_probs)

    @property
    def support(self) -> np.ndarray:
        return np.arange(self.m + 1) / self.m


class LimitDistribution(BaseModel):
    """Beta(b, g) almost-sure limit of C_m as m grows."""

    model_config = ConfigDict(frozen=True)

    params: CoverageParams

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def g(self) -> int:
        return self.params.g


class Dataset(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    predictors: np.ndarray
    response: np.ndarray

    @field_validator("predictors", mode="before")
    @classmethod
    def _check_predictors(cls, v):
        return _frozen_array(v, 2, "predictors")

    @field_validator("response", mode="before")
    @classmethod
    def _check_response(cls, v):
        return _frozen_array(v, 1, "response")

    @model_validator(mode="after")
    def _check_rows(self):
        if self.predictors.shape[0] != self.response.shape[0]:
            raise ValueError(
                f"{self.predictors.shape[0]} predictor rows but {self.response.shape[0]} responses"
            )
        if self.response.shape[0] == 0:
            raise ValueError("dataset must contain at least one row")
        return self

    @property
    def rows(self) -> int:
        return int(self.response.shape[0])

    @property
    def dim(self) -> int:
        return int(self.predictors.shape[1])

    def subset(self, start: int, stop: int) -> "Dataset":
        return Dataset(predictors=self.predictors[start:stop], response=self.response[start:stop])


class PredictionInterval(BaseModel):
    """Open interval (lower, upper); empty when upper <= lower."""

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float

    @property
    def is_empty(self) -> bool:
        return self.upper <= self.lower

    def contains(self, y: float) -> bool:
        return self.lower < y < self.upper


class ModelSpec(BaseModel):
    """Regression model variant plus hyperparameters; validated when fitted."""

    model_config = ConfigDict(frozen=True)

    kind: ModelKind
    k: int = 5
    p: float = 0.5
    base: Optional["ModelSpec"] = None


class ReplicationConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    r: int = Field(default=100, ge=1)
    n: int = Field(default=10, ge=1)
    m: int = Field(default=500, ge=1)
    alpha: float = Field(default=0.2, gt=0.0, lt=1.0)
    replications: int = Field(default=2000, ge=1)
    master_seed: int = Field(default=7, ge=0, lt=2**64)
    scorer_kind: ScorerKind = "standard"
    model_spec: ModelSpec = ModelSpec(kind="knn_mean")
    quantile_levels: Optional[Tuple[float, float]] = None


class ReplicationSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    successes: List[int]
    coverages: List[float]
    empirical_pmf: Dict[int, float]
    mean_coverage: float
    min_coverage: float
    below_lower_bound_fraction: float

    @model_validator(mode="after")
    def _check_lengths(self):
        if len(self.coverages) != len(self.successes):
            raise ValueError("coverages and successes must have equal length")
        if abs(math.fsum(self.empirical_pmf.values()) - 1.0) > 1e-9:
            raise ValueError("empirical pmf frequencies must sum to 1")
        return self

    @property
    def replications(self) -> int:
        return len(self.coverages)


class CsvTable(BaseModel):
    header: List[str]
    rows: List[List[float]]

    @model_validator(mode="after")
    def _check_rectangular(self):
        width = len(self.header)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} cells, header has {width}")
            if not all(math.isfinite(cell) for cell in row):
                raise ValueError(f"row {i} contains a non-finite cell")
        return self

    def column(self, name: str) -> List[float]:
        idx = self.header.index(name)
        return [row[idx] for row in self.rows]
