# \src\__init__.py
"""
covplan
=======

Split conformal prediction together with the exact law of its future
coverage: the beta-binomial finite-horizon law, its Beta limit, a
calibration-size planner and a reproducible Monte Carlo harness.

Usage:
    from src import derive_params, finite_horizon_pmf, plan_calibration_size
    from src.conformal import build_scorer, calibrate, predict_interval
    from src.simulation import run_replications
"""

from src.models.data_models import (
    CoverageParams,
    Dataset,
    FiniteHorizonPmf,
    LimitDistribution,
    ModelSpec,
    PredictionInterval,
    ReplicationConfig,
    ReplicationSummary,
)
from src.distributions import (
    derive_params,
    finite_horizon_pmf,
    limit_cdf,
    limit_distribution,
    limit_moments,
    limit_normal_approx,
    limit_pdf,
    plan_calibration_size,
    pmf_mean,
)
from src.conformal import (
    CalibratedPredictor,
    build_scorer,
    calibrate,
    coverage_indicators,
    future_coverage,
    predict_interval,
    score,
)
from src.models.regressors import fit, predict
from src.simulation import (
    friedman_generate,
    ks_distance,
    run_replications,
    urn_pmf_oracle,
    urn_sample,
)

# Package metadata
__version__ = "1.0.0"
__author__ = "Your Team"
__description__ = "Split conformal prediction with exact future-coverage laws"

__all__ = [
    # Domain types
    'CoverageParams', 'Dataset', 'FiniteHorizonPmf', 'LimitDistribution', 'ModelSpec',
    'PredictionInterval', 'ReplicationConfig', 'ReplicationSummary', 'CalibratedPredictor',

    # Coverage laws and planning
    'derive_params', 'finite_horizon_pmf', 'pmf_mean', 'limit_distribution', 'limit_cdf',
    'limit_pdf', 'limit_moments', 'limit_normal_approx', 'plan_calibration_size',

    # Conformal prediction
    'build_scorer', 'score', 'calibrate', 'predict_interval', 'coverage_indicators',
    'future_coverage', 'fit', 'predict',

    # Simulation
    'urn_pmf_oracle', 'urn_sample', 'friedman_generate', 'run_replications', 'ks_distance',

    # Package info
    '__version__',
    '__author__',
    '__description__'
]
