# src\simulation\diagnostics.py
from typing import Sequence

import numpy as np

from src.models.data_models import FiniteHorizonPmf


def ks_distance(coverages: Sequence[float], theoretical: FiniteHorizonPmf) -> float:
    """Largest |empirical CDF - exact CDF| over the support points k/m."""
    observed = np.sort(np.asarray(coverages, dtype=float))
    if observed.size == 0:
        raise ValueError("ks_distance needs at least one coverage value")
    support = theoretical.support
    empirical = np.searchsorted(observed, support, side="right") / observed.size
    exact = np.minimum(np.cumsum(theoretical.probabilities), 1.0)
    return float(np.max(np.abs(empirical - exact)))
