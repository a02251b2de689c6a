# src\simulation\friedman.py
"""
Exchangeable Friedman-type regression data.

    Y = 10 sin(pi X1 X2) + 20 (X3 - 1/2)^2 + 10 X4 + 5 X5 + W + eps

with ten U[0, 1] predictors (X6..X10 are pure noise), eps ~ N(0, 1) and a
shift W ~ Exp(1) drawn once per replication and shared by every row; the
shared W makes the rows exchangeable but not independent.

Sampling uses numpy's Generator: uniforms from random(), normals from
standard_normal() (ziggurat), and W by inverse transform -log(1 - U).
"""

import numpy as np

from src.models.data_models import Dataset
from src.utils.validators import validate_positive_int

N_FEATURES = 10


def friedman_response(predictors, w: float, noise) -> np.ndarray:
    X = np.asarray(predictors, dtype=float)
    return (
        10.0 * np.sin(np.pi * X[:, 0] * X[:, 1])
        + 20.0 * (X[:, 2] - 0.5) ** 2
        + 10.0 * X[:, 3]
        + 5.0 * X[:, 4]
        + w
        + np.asarray(noise, dtype=float)
    )


def draw_shift(rng: np.random.Generator) -> float:
    """W ~ Exp(1)."""
    return float(-np.log1p(-rng.random()))


def friedman_generate(rows: int, w: float, seed: int) -> Dataset:
    validate_positive_int(rows, "rows")
    rng = np.random.default_rng(seed)
    X = rng.random((rows, N_FEATURES))
    noise = rng.standard_normal(rows)
    return Dataset(predictors=X, response=friedman_response(X, w, noise))
