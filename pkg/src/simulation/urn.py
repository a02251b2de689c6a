# src\simulation\urn.py
"""
Polya urn: start with b black and g gray balls, draw one, return it together
with one more ball of the same color. A black draw is a covered future
observation. The exact dynamic program below is independent of the closed
form in src.distributions.finite_horizon and serves as its oracle.
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.exceptions import OracleTooLarge
from src.models.data_models import CoverageParams, FiniteHorizonPmf
from src.utils.validators import validate_positive_int

ORACLE_MAX_M = 64


class UrnState(BaseModel):
    model_config = ConfigDict(frozen=True)

    black: int = Field(ge=1)
    gray: int = Field(ge=1)

    @classmethod
    def from_params(cls, params: CoverageParams) -> "UrnState":
        return cls(black=params.b, gray=params.g)

    @property
    def total(self) -> int:
        return self.black + self.gray

    @property
    def success_probability(self) -> Fraction:
        return Fraction(self.black, self.total)

    def after(self, success: bool) -> "UrnState":
        if success:
            return UrnState(black=self.black + 1, gray=self.gray)
        return UrnState(black=self.black, gray=self.gray + 1)


def urn_sequence_probability(params: CoverageParams, bits: Sequence[int]) -> Fraction:
    """Exact probability of one draw sequence by the product rule."""
    state = UrnState.from_params(params)
    prob = Fraction(1)
    for bit in bits:
        p = state.success_probability
        prob *= p if bit else 1 - p
        state = state.after(bool(bit))
    return prob


def urn_pmf_exact(params: CoverageParams, m: int) -> List[Fraction]:
    """P(k successes in m draws), k = 0..m, in exact rational arithmetic."""
    validate_positive_int(m, "m")
    if m > ORACLE_MAX_M:
        raise OracleTooLarge(m, ORACLE_MAX_M)
    b, g, n = params.b, params.g, params.n
    row = [Fraction(1)]
    for t in range(m):
        denom = n + 1 + t
        nxt = [Fraction(0)] * (t + 2)
        for s, p in enumerate(row):
            nxt[s + 1] += p * Fraction(b + s, denom)
            nxt[s] += p * Fraction(g + t - s, denom)
        row = nxt
    return row


def urn_pmf_oracle(params: CoverageParams, m: int) -> FiniteHorizonPmf:
    exact = urn_pmf_exact(params, m)
    log_probs = [math.log(p.numerator) - math.log(p.denominator) for p in exact]
    return FiniteHorizonPmf(params=params, m=m, log_probs=log_probs)


def urn_sample(
    params: CoverageParams, m: int, seed: int, size: Optional[int] = None
) -> np.ndarray:
    """Draw the urn process m times; returns uint8 bits, shape (m,) or (size, m).

    The same seed always reproduces the same bits.
    """
    validate_positive_int(m, "m")
    count = 1 if size is None else validate_positive_int(size, "size")
    rng = np.random.default_rng(seed)
    bits = np.empty((count, m), dtype=np.uint8)
    successes = np.zeros(count, dtype=np.int64)
    for t in range(m):
        draw = rng.random(count) < (params.b + successes) / (params.n + 1 + t)
        bits[:, t] = draw
        successes += draw
    return bits[0] if size is None else bits
