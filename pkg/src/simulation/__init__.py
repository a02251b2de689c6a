# src\simulation\__init__.py
"""Urn oracle, exchangeable data generator and the Monte Carlo harness."""

from src.simulation.urn import (
    ORACLE_MAX_M,
    UrnState,
    urn_pmf_exact,
    urn_pmf_oracle,
    urn_sample,
    urn_sequence_probability,
)
from src.simulation.friedman import N_FEATURES, draw_shift, friedman_generate, friedman_response
from src.simulation.harness import derive_seed, run_replication, run_replications, summarize
from src.simulation.diagnostics import ks_distance

__all__ = [
    'ORACLE_MAX_M', 'UrnState', 'urn_pmf_exact', 'urn_pmf_oracle', 'urn_sample',
    'urn_sequence_probability',
    'N_FEATURES', 'draw_shift', 'friedman_generate', 'friedman_response',
    'derive_seed', 'run_replication', 'run_replications', 'summarize',
    'ks_distance',
]
