# tests/test_limit.py
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from src.distributions.limit import (
    limit_cdf,
    limit_cdf_betainc,
    limit_distribution,
    limit_moments,
    limit_normal_approx,
    limit_pdf,
    limit_quantile,
)
from src.distributions.params import derive_params
from tests.conftest import GRID_ALPHA, GRID_N, valid_params


def beta(n, alpha):
    return limit_distribution(derive_params(n, alpha))


def test_cdf_binomial_sum_value():
    assert limit_cdf(beta(10, 0.2), 0.8) == pytest.approx(2.8 * 0.8**9, rel=1e-12)


def test_cdf_matches_integrated_density():
    dist = beta(10, 0.2)
    area, _ = quad(lambda t: limit_pdf(dist, t), 0.0, 0.8)
    assert limit_cdf(dist, 0.8) == pytest.approx(area, abs=1e-8)


@pytest.mark.parametrize("t, expected", [(0.0, 0.0), (-1.0, 0.0), (1.0, 1.0), (3.0, 1.0)])
def test_cdf_outside_open_unit_interval(t, expected):
    for params in valid_params((1, 10, 100), (0.2, 0.45)):
        assert limit_cdf(limit_distribution(params), t) == expected


def test_cdf_is_nondecreasing():
    grid = np.linspace(0.0, 1.0, 201)
    for params in valid_params(GRID_N, GRID_ALPHA):
        values = [limit_cdf(limit_distribution(params), t) for t in grid]
        assert all(a <= b + 1e-15 for a, b in zip(values, values[1:]))


def test_binomial_sum_agrees_with_incomplete_beta():
    grid = np.linspace(0.01, 0.99, 99)
    for params in valid_params(GRID_N, GRID_ALPHA):
        dist = limit_distribution(params)
        for t in grid:
            assert limit_cdf(dist, t) == pytest.approx(limit_cdf_betainc(dist, t), abs=1e-10)


@pytest.mark.parametrize("n, alpha, t, expected", [
    (1, 0.5, 0.3, 1.0),
    (1, 0.5, 0.9, 1.0),
    (10, 0.2, 0.9, 90 * 0.9**8 * 0.1),
    (3, 0.5, 0.5, 1.5),
])
def test_pdf_values(n, alpha, t, expected):
    assert limit_pdf(beta(n, alpha), t) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n, alpha", [(10, 0.2), (4, 0.45), (100, 0.05)])
def test_pdf_integrates_to_one(n, alpha):
    dist = beta(n, alpha)
    area, _ = quad(lambda t: limit_pdf(dist, t), 0.0, 1.0, limit=200)
    assert area == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("t", [0.0, 1.0, -0.5, 1.5])
def test_pdf_requires_open_interval(t):
    with pytest.raises(ValueError):
        limit_pdf(beta(10, 0.2), t)


def test_moments_exact():
    assert limit_moments(beta(10, 0.2)) == (Fraction(9, 11), Fraction(18, 121 * 12))
    assert limit_moments(beta(1, 0.5)) == (Fraction(1, 2), Fraction(1, 12))


def test_mean_equals_rank_over_n_plus_one():
    for params in valid_params(GRID_N, GRID_ALPHA):
        mean, _ = limit_moments(limit_distribution(params))
        assert mean == Fraction(params.b, params.n + 1)


@pytest.mark.parametrize("alpha", [0.1, 0.2])
def test_mean_gap_shrinks_with_n(alpha):
    gaps = [
        float(limit_moments(beta(n, alpha))[0]) - (1 - alpha)
        for n in (10, 100, 1000)
    ]
    assert all(gap >= -1e-15 for gap in gaps)
    assert gaps[0] > gaps[1] > gaps[2]


@pytest.mark.parametrize("n, alpha, center, variance", [(100, 0.1, 0.9, 0.0009), (10, 0.2, 0.8, 0.016)])
def test_normal_approximation(n, alpha, center, variance):
    got_center, got_variance = limit_normal_approx(n, alpha)
    assert got_center == pytest.approx(center)
    assert got_variance == pytest.approx(variance)


def test_large_n_median_near_nominal():
    assert abs(limit_cdf(beta(1000, 0.1), 0.9) - 0.5) <= 0.02


@pytest.mark.parametrize("q", [0.05, 0.5, 0.95])
def test_quantile_inverts_cdf(q):
    dist = beta(10, 0.2)
    assert limit_cdf(dist, limit_quantile(dist, q)) == pytest.approx(q, abs=1e-9)


def test_cdf_is_nondecreasing_near_one():
    dist = beta(100, 0.45)
    assert (dist.b, dist.g) == (56, 45)
    grid = np.linspace(0.8, 1.0, 401)
    values = [limit_cdf(dist, t) for t in grid]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert limit_cdf(dist, 0.885) <= limit_cdf(dist, 0.895)


@pytest.mark.parametrize("t", [float("nan"), float("inf"), float("-inf")])
def test_cdf_rejects_non_finite_points(t):
    with pytest.raises(ValueError):
        limit_cdf(beta(10, 0.2), t)
    with pytest.raises(ValueError):
        limit_cdf_betainc(beta(10, 0.2), t)
