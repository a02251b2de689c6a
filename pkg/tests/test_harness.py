# tests/test_harness.py
from fractions import Fraction

import pytest

from src.distributions.finite_horizon import finite_horizon_pmf, pmf_cdf
from src.distributions.params import derive_params
from src.models.data_models import ModelSpec, ReplicationConfig
from src.simulation.diagnostics import ks_distance
from src.simulation.harness import derive_seed, run_replication, run_replications, summarize

SMALL = dict(r=30, n=10, m=40, alpha=0.2, replications=12, master_seed=5)


def test_derive_seed():
    assert derive_seed(7, 0) == derive_seed(7, 0)
    seeds = {derive_seed(7, i) for i in range(100)}
    assert len(seeds) == 100
    assert all(0 <= s < 2**64 for s in seeds)
    assert derive_seed(7, 0) != derive_seed(8, 0)


def test_summarize():
    summary = summarize([1, 2, 2], m=4, alpha=0.5)
    assert summary.coverages == [0.25, 0.5, 0.5]
    assert summary.mean_coverage == pytest.approx(1.25 / 3)
    assert summary.min_coverage == 0.25
    assert summary.empirical_pmf == pytest.approx({1: 1 / 3, 2: 2 / 3})
    # coverage equal to 1 - alpha is not below it
    assert summary.below_lower_bound_fraction == pytest.approx(1 / 3)
    assert summary.replications == 3


def test_summarize_ignores_order():
    a = summarize([3, 1, 4, 1, 5], m=5, alpha=0.2)
    b = summarize([5, 4, 3, 1, 1], m=5, alpha=0.2)
    assert a.mean_coverage == b.mean_coverage
    assert a.empirical_pmf == b.empirical_pmf
    assert a.below_lower_bound_fraction == b.below_lower_bound_fraction


def test_summarize_needs_replications():
    with pytest.raises(ValueError):
        summarize([], m=4, alpha=0.5)


def test_replication_is_reproducible():
    config = ReplicationConfig(**SMALL)
    assert run_replication(config, 3) == run_replication(config, 3)
    assert 0 <= run_replication(config, 3) <= config.m


def test_same_seed_same_summary():
    config = ReplicationConfig(**SMALL)
    assert run_replications(config) == run_replications(config)


def test_worker_count_does_not_change_results():
    config = ReplicationConfig(**SMALL)
    sequential = run_replications(config, workers=1)
    parallel = run_replications(config, workers=4, chunksize=2)
    assert sequential.successes == parallel.successes
    assert sequential == parallel


@pytest.mark.parametrize("model", ["knn_mean", "constant_mean"])
def test_coverage_follows_exact_law(model):
    config = ReplicationConfig(
        r=100, n=10, m=500, alpha=0.2, replications=2000, master_seed=7,
        model_spec=ModelSpec(kind=model, k=5),
    )
    summary = run_replications(config, workers=2)
    params = derive_params(10, 0.2)
    exact = finite_horizon_pmf(params, 500)

    assert ks_distance(summary.coverages, exact) <= 0.04
    assert abs(summary.mean_coverage - 9 / 11) <= 0.01
    expected_below = pmf_cdf(exact, Fraction(4, 5), inclusive=False)
    assert abs(summary.below_lower_bound_fraction - expected_below) <= 0.03
    assert summary.min_coverage < 0.5


@pytest.mark.parametrize("scorer", ["locally_weighted", "cqr"])
def test_other_scorers_follow_exact_law(scorer):
    config = ReplicationConfig(
        r=100, n=10, m=200, alpha=0.2, replications=500, master_seed=11, scorer_kind=scorer,
    )
    summary = run_replications(config, workers=2)
    exact = finite_horizon_pmf(derive_params(10, 0.2), 200)
    assert ks_distance(summary.coverages, exact) <= 0.08
