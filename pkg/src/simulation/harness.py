# src\simulation\harness.py
"""
Monte Carlo replication harness.

Replication i draws everything from its own generator, seeded by mixing
(master_seed, i) through numpy's SeedSequence, so no state is shared between
replications. Results are collected in replication order and reduced with
order-independent operations, which makes the summary identical for any
number of workers.
"""

import math
from collections import Counter
from fractions import Fraction
from functools import partial
from typing import Sequence

import numpy as np
from tqdm import tqdm
from tqdm.contrib.concurrent import process_map

from src.conformal.predictor import calibrate, coverage_indicators
from src.conformal.scorers import build_scorer
from src.models.data_models import ReplicationConfig, ReplicationSummary, alpha_fraction
from src.simulation.friedman import draw_shift, friedman_generate


def derive_seed(master_seed: int, index: int) -> int:
    """64-bit seed for one replication."""
    state = np.random.SeedSequence([master_seed, index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def run_replication(config: ReplicationConfig, index: int) -> int:
    """Number of covered future observations in replication `index`."""
    rng = np.random.default_rng(derive_seed(config.master_seed, index))
    w = draw_shift(rng)
    data = friedman_generate(
        config.r + config.n + config.m, w, seed=int(rng.integers(0, 2**62))
    )
    train = data.subset(0, config.r)
    calib = data.subset(config.r, config.r + config.n)
    future = data.subset(config.r + config.n, data.rows)

    scorer = build_scorer(
        config.scorer_kind, config.model_spec, train, config.alpha, config.quantile_levels
    )
    predictor = calibrate(scorer, calib, config.alpha)
    return int(np.count_nonzero(coverage_indicators(predictor, future)))


def summarize(successes: Sequence[int], m: int, alpha: float) -> ReplicationSummary:
    total = len(successes)
    if total == 0:
        raise ValueError("no replications to summarize")
    lower = 1 - alpha_fraction(alpha)
    counts = Counter(successes)
    coverages = [s / m for s in successes]
    below = sum(c for k, c in counts.items() if Fraction(k, m) < lower)
    return ReplicationSummary(
        m=m,
        successes=list(successes),
        coverages=coverages,
        empirical_pmf={k: counts[k] / total for k in sorted(counts)},
        mean_coverage=math.fsum(coverages) / total,
        min_coverage=min(coverages),
        below_lower_bound_fraction=below / total,
    )


def run_replications(
    config: ReplicationConfig,
    workers: int = 1,
    progress: bool = False,
    chunksize: int = 16,
) -> ReplicationSummary:
    task = partial(run_replication, config)
    indices = range(config.replications)
    if workers <= 1:
        successes = [task(i) for i in tqdm(indices, desc="Replications", disable=not progress)]
    else:
        successes = process_map(
            task,
            indices,
            max_workers=workers,
            chunksize=chunksize,
            desc="Replications",
            disable=not progress,
        )
    return summarize(successes, config.m, config.alpha)
