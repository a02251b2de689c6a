# tests/test_urn.py
import math
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from src.distributions.finite_horizon import finite_horizon_pmf, pmf_mean, pmf_variance
from src.distributions.params import derive_params
from src.exceptions import OracleTooLarge
from src.simulation.urn import (
    ORACLE_MAX_M,
    UrnState,
    urn_pmf_exact,
    urn_pmf_oracle,
    urn_sample,
    urn_sequence_probability,
)
from tests.conftest import ORACLE_ALPHA, ORACLE_N, valid_params


def test_oracle_matches_hand_enumeration():
    params = derive_params(4, 0.45)
    assert (params.b, params.g) == (3, 2)
    assert urn_pmf_exact(params, 5)[3] == Fraction(5, 21)


def test_uniform_counts_for_one_black_one_gray():
    params = derive_params(1, 0.5)
    assert urn_pmf_exact(params, 2) == [Fraction(1, 3)] * 3
    for m in range(1, 11):
        assert urn_pmf_exact(params, m) == [Fraction(1, m + 1)] * (m + 1)


def test_single_draw():
    params = derive_params(10, 0.2)
    assert urn_pmf_exact(params, 1) == [Fraction(2, 11), Fraction(9, 11)]


@pytest.mark.parametrize("params", valid_params(ORACLE_N, ORACLE_ALPHA))
@pytest.mark.parametrize("m", range(1, 13))
def test_closed_form_matches_oracle(params, m):
    exact = urn_pmf_exact(params, m)
    assert sum(exact) == 1
    closed = finite_horizon_pmf(params, m).probabilities
    np.testing.assert_allclose(closed, [float(p) for p in exact], rtol=0, atol=1e-12)


def test_oracle_as_pmf():
    params = derive_params(10, 0.2)
    oracle = urn_pmf_oracle(params, 2)
    np.testing.assert_allclose(oracle.probabilities, [1 / 22, 6 / 22, 15 / 22], atol=1e-15)


def test_oracle_size_limit():
    params = derive_params(10, 0.2)
    urn_pmf_exact(params, ORACLE_MAX_M)
    with pytest.raises(OracleTooLarge):
        urn_pmf_exact(params, ORACLE_MAX_M + 1)


def test_sequence_probability():
    params = derive_params(4, 0.45)
    assert urn_sequence_probability(params, [1, 0, 0, 1, 1]) == Fraction(1, 42)


def test_sequence_probability_is_exchangeable():
    params = derive_params(4, 0.45)
    values = {urn_sequence_probability(params, p) for p in permutations([1, 0, 0, 1, 1])}
    assert values == {Fraction(1, 42)}
    # ten orderings with three successes make up the k = 3 mass
    assert 10 * Fraction(1, 42) == urn_pmf_exact(params, 5)[3]


def test_urn_state_transitions():
    state = UrnState.from_params(derive_params(10, 0.2))
    assert (state.black, state.gray, state.total) == (9, 2, 11)
    assert state.success_probability == Fraction(9, 11)
    assert state.after(True) == UrnState(black=10, gray=2)
    assert state.after(False) == UrnState(black=9, gray=3)


def test_sample_is_reproducible():
    params = derive_params(10, 0.2)
    a = urn_sample(params, 20, seed=42, size=100)
    b = urn_sample(params, 20, seed=42, size=100)
    assert a.tobytes() == b.tobytes()
    assert a.dtype == np.uint8
    assert a.shape == (100, 20)
    assert urn_sample(params, 20, seed=42).shape == (20,)
    assert a.tobytes() != urn_sample(params, 20, seed=43, size=100).tobytes()


def test_first_draw_frequency():
    params = derive_params(10, 0.2)
    draws = urn_sample(params, 1, seed=3, size=100_000)[:, 0]
    p = 9 / 11
    assert abs(draws.mean() - p) < 3 * math.sqrt(p * (1 - p) / draws.size)


def test_sampled_mean_coverage():
    params = derive_params(10, 0.2)
    m, size = 50, 100_000
    coverage = urn_sample(params, m, seed=11, size=size).sum(axis=1) / m
    pmf = finite_horizon_pmf(params, m)
    assert pmf_mean(pmf) == pytest.approx(9 / 11, abs=1e-12)
    assert abs(coverage.mean() - 9 / 11) < 3 * math.sqrt(pmf_variance(pmf) / size)


def test_sampled_sequences_are_exchangeable():
    params = derive_params(4, 0.45)
    size = 100_000
    bits = urn_sample(params, 3, seed=5, size=size)
    codes = bits[:, 0] * 4 + bits[:, 1] * 2 + bits[:, 2]
    freq = {code: np.count_nonzero(codes == code) / size for code in (0b110, 0b101, 0b011)}
    expected = float(urn_sequence_probability(params, [1, 1, 0]))
    for a, b in [(0b110, 0b101), (0b110, 0b011), (0b101, 0b011)]:
        se = math.sqrt((freq[a] + freq[b] - (freq[a] - freq[b]) ** 2) / size)
        assert abs(freq[a] - freq[b]) < 3 * se
    for value in freq.values():
        assert abs(value - expected) < 3 * math.sqrt(expected * (1 - expected) / size)
