# tests/test_params.py
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.distributions.params import derive_params, min_calibration_size
from src.exceptions import DegenerateCalibration
from src.models.data_models import CoverageParams
from tests.conftest import GRID_ALPHA, GRID_N, valid_params


@pytest.mark.parametrize("n, alpha, b, g", [
    (4, 0.45, 3, 2),
    (10, 0.2, 9, 2),
    (1, 0.5, 1, 1),
    (860, 0.1, 775, 86),
    (19, 0.05, 19, 1),
])
def test_derive_params_counts(n, alpha, b, g):
    params = derive_params(n, alpha)
    assert (params.b, params.g) == (b, g)


def test_degenerate_calibration_names_min_size():
    with pytest.raises(DegenerateCalibration) as exc:
        derive_params(1, 0.1)
    assert exc.value.min_n == 9
    assert "n >= 9" in str(exc.value)


@pytest.mark.parametrize("alpha, expected", [(0.1, 9), (0.5, 1), (0.05, 19), (0.45, 2), (0.9, 1)])
def test_min_calibration_size(alpha, expected):
    assert min_calibration_size(alpha) == expected
    derive_params(expected, alpha)
    if expected > 1:
        with pytest.raises(DegenerateCalibration):
            derive_params(expected - 1, alpha)


@pytest.mark.parametrize("n, alpha", [(0, 0.1), (-3, 0.1), (10, 0.0), (10, 1.0), (10, -0.2), (2.5, 0.1)])
def test_derive_params_rejects_bad_input(n, alpha):
    with pytest.raises(ValueError):
        derive_params(n, alpha)


def test_urn_split_and_validity_bounds_over_grid():
    for params in valid_params(GRID_N, GRID_ALPHA):
        assert params.b + params.g == params.n + 1
        assert 1 <= params.b <= params.n
        assert params.lower_bound <= params.expected_coverage <= params.upper_bound


def test_bounds_for_friedman_configuration():
    params = derive_params(10, 0.2)
    assert params.lower_bound == Fraction(4, 5)
    assert params.upper_bound == Fraction(4, 5) + Fraction(1, 11)
    assert float(params.upper_bound) == pytest.approx(0.8909, abs=1e-4)


def test_inconsistent_counts_are_rejected():
    with pytest.raises(ValidationError):
        CoverageParams(n=10, alpha=0.2, b=8, g=3)


def test_smaller_alpha_never_decreases_b():
    alphas = [0.45, 0.3, 0.2, 0.15, 0.1, 0.05]
    ranks = [derive_params(100, a).b for a in alphas]
    assert ranks == sorted(ranks)
