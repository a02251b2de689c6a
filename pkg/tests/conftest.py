# tests/conftest.py
import json
from itertools import product

import pytest
from click.testing import CliRunner

from src.distributions.params import derive_params
from src.exceptions import DegenerateCalibration

GRID_N = (1, 4, 10, 100, 860)
GRID_ALPHA = (0.05, 0.2, 0.45)
ORACLE_N = (1, 4, 10, 100)
ORACLE_ALPHA = (0.05, 0.2, 0.45, 0.5)


def valid_params(ns, alphas):
    """CoverageParams for every (n, alpha) pair that is not degenerate"""
    found = []
    for n, alpha in product(ns, alphas):
        try:
            found.append(derive_params(n, alpha))
        except DegenerateCalibration:
            continue
    return found


def parse_json(result):
    return json.loads(result.stdout)


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always keeps stderr apart from stdout
        return CliRunner()
