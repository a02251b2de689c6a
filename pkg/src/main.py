# src/main.py
import json
import sys
import warnings
from typing import Optional

import click
import yaml
from pydantic import ValidationError

from src.conformal.predictor import calibrate, coverage_indicators, predict_intervals
from src.conformal.scorers import build_scorer
from src.distributions.finite_horizon import finite_horizon_pmf, pmf_cdf
from src.distributions.limit import (
    limit_cdf,
    limit_distribution,
    limit_moments,
    limit_normal_approx,
    limit_quantile,
)
from src.distributions.params import derive_params
from src.distributions.planner import concentration_probability, plan_calibration_size
from src.exceptions import CoverageError, InputValidationError
from src.models.data_models import Dataset, ModelSpec, ReplicationConfig
from src.simulation.diagnostics import ks_distance
from src.simulation.harness import run_replications
from src.utils import console
from src.utils.config import load_config, load_environment, resolve_workers
from src.utils.csv_processor import CSVProcessor

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

SCORER_CHOICES = click.Choice(["standard", "locally_weighted", "cqr"])
MODEL_CHOICES = click.Choice(["constant_mean", "knn_mean", "knn_quantile"])


class CoverageCLI(click.Group):
    """Maps failures to exit statuses: 1 for usage/validation, 2 for domain errors."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            console.error("Aborted")
            code = EXIT_USAGE
        except CoverageError as e:
            console.error(str(e))
            code = EXIT_DOMAIN
        except (InputValidationError, ValidationError, ValueError, OSError, yaml.YAMLError) as e:
            console.error(str(e))
            code = EXIT_USAGE
        if standalone_mode:
            sys.exit(code)
        return code


def _emit_json(payload: dict):
    click.echo(json.dumps(payload, indent=2))


def _report_warnings(caught):
    for w in caught:
        console.warning(str(w.message))


@click.group(cls=CoverageCLI)
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), help='YAML settings file')
@click.option('--env-file', type=click.Path(dir_okay=False), help='.env file with COVPLAN_* values')
@click.option('--no-color', is_flag=True, help='Disable colored status lines')
@click.pass_context
def cli(ctx, config_path, env_file, no_color):
    """Split conformal prediction with exact future-coverage laws"""
    config = load_config(config_path)
    console.configure(color=config.output.color and not no_color)
    ctx.obj = {'config': config, 'env': load_environment(env_file)}


@cli.command()
@click.option('--alpha', type=float, required=True, help='Nominal miscoverage level')
@click.option('--epsilon', type=float, required=True, help='Half-width of the coverage band')
@click.option('--gamma', type=float, required=True, help='Required probability of the band')
@click.option('--n-max', type=int, default=None, help='Largest calibration size to scan')
@click.option('--horizon', type=int, default=None, help='Plan for a finite horizon m instead of the limit')
@click.option('--step', type=int, default=None, help='Only try multiples of this size (10 gives rounded sizes)')
@click.pass_obj
def plan(obj, alpha, epsilon, gamma, n_max, horizon, step):
    """Smallest calibration size concentrating coverage within +/-epsilon of 1-alpha"""
    n_max = n_max if n_max is not None else obj['config'].planner.n_max
    step = step if step is not None else obj['config'].planner.step
    n = plan_calibration_size(alpha, epsilon, gamma, n_max=n_max, horizon=horizon, step=step)
    params = derive_params(n, alpha)
    achieved = concentration_probability(params, epsilon, horizon)
    _emit_json({
        'n': n,
        'achieved_probability': achieved,
        'b': params.b,
        'g': params.g,
        'alpha': alpha,
        'epsilon': epsilon,
        'gamma': gamma,
        'horizon': horizon,
        'step': step,
    })
    console.success(f"Calibration size n={n} (probability {achieved:.6f})")


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Calibration sample size')
@click.option('--alpha', type=float, required=True)
@click.option('--m', 'm', type=int, required=True, help='Horizon')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None, help='CSV path (stdout if omitted)')
def pmf(n, alpha, m, out_path):
    """Exact law of the future coverage over m observations"""
    params = derive_params(n, alpha)
    table = finite_horizon_pmf(params, m)
    CSVProcessor().write_pmf(table, out_path)
    if out_path:
        console.success(f"Wrote {m + 1} rows to {out_path}")


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Calibration sample size')
@click.option('--alpha', type=float, required=True)
@click.option('--t', 't_grid', type=float, multiple=True, help='CDF evaluation point (repeatable)')
@click.pass_obj
def limit(obj, n, alpha, t_grid):
    """Beta limit of the future coverage"""
    settings = obj['config'].limit
    params = derive_params(n, alpha)
    dist = limit_distribution(params)
    mean, variance = limit_moments(dist)
    center, normal_variance = limit_normal_approx(n, alpha)
    grid = list(t_grid) if t_grid else settings.grid
    _emit_json({
        'n': n,
        'alpha': alpha,
        'b': params.b,
        'g': params.g,
        'mean': float(mean),
        'variance': float(variance),
        'mean_exact': str(mean),
        'variance_exact': str(variance),
        'normal_approx': {'center': center, 'variance': normal_variance},
        'quantiles': [[q, limit_quantile(dist, q)] for q in settings.quantiles],
        'cdf': [[t, limit_cdf(dist, t)] for t in grid],
    })


@cli.command()
@click.option('--r', 'r', type=int, default=None, help='Training size')
@click.option('--n', 'n', type=int, default=None, help='Calibration size')
@click.option('--m', 'm', type=int, default=None, help='Horizon')
@click.option('--alpha', type=float, default=None)
@click.option('--reps', type=int, default=None, help='Number of replications')
@click.option('--seed', type=int, default=None, help='Master seed')
@click.option('--scorer', type=SCORER_CHOICES, default=None)
@click.option('--model', type=MODEL_CHOICES, default=None)
@click.option('--k', 'k', type=int, default=None, help='Neighbours for k-NN models')
@click.option('--workers', type=int, default=None, help='Worker processes (capped by COVPLAN_THREADS)')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None, help='CSV of per-replication coverages')
@click.option('--no-progress', is_flag=True)
@click.pass_obj
def simulate(obj, r, n, m, alpha, reps, seed, scorer, model, k, workers, out_path, no_progress):
    """Monte Carlo replications on exchangeable Friedman data"""
    config = obj['config']
    defaults = config.simulation

    def pick(value, default):
        return default if value is None else value

    sim_config = ReplicationConfig(
        r=pick(r, defaults.r),
        n=pick(n, defaults.n),
        m=pick(m, defaults.m),
        alpha=pick(alpha, defaults.alpha),
        replications=pick(reps, defaults.replications),
        master_seed=pick(seed, defaults.seed),
        scorer_kind=pick(scorer, defaults.scorer),
        model_spec=ModelSpec(kind=pick(model, defaults.model), k=pick(k, defaults.k)),
    )
    params = derive_params(sim_config.n, sim_config.alpha)
    exact = finite_horizon_pmf(params, sim_config.m)
    worker_count = resolve_workers(workers, obj['env'])

    console.info(
        f"Running {sim_config.replications} replications on {worker_count} worker(s)"
    )
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('once')
        summary = run_replications(
            sim_config,
            workers=worker_count,
            progress=config.output.progress and not no_progress,
            chunksize=defaults.chunksize,
        )
    _report_warnings(caught)

    if out_path:
        CSVProcessor().write_coverages(summary, out_path)
        console.success(f"Wrote {summary.replications} coverages to {out_path}")

    _emit_json({
        'replications': summary.replications,
        'n': sim_config.n,
        'm': sim_config.m,
        'alpha': sim_config.alpha,
        'seed': sim_config.master_seed,
        'mean': summary.mean_coverage,
        'min': summary.min_coverage,
        'ks_vs_exact': ks_distance(summary.coverages, exact),
        'below_lower_bound_fraction': summary.below_lower_bound_fraction,
        'exact_below_probability': pmf_cdf(exact, params.lower_bound, inclusive=False),
        'exact_mean': float(params.expected_coverage),
        'marginal_bounds': [float(params.lower_bound), float(params.upper_bound)],
    })


@cli.command()
@click.option('--train', 'train_path', type=click.Path(dir_okay=False), required=True)
@click.option('--calib', 'calib_path', type=click.Path(dir_okay=False), required=True)
@click.option('--test', 'test_path', type=click.Path(dir_okay=False), required=True)
@click.option('--alpha', type=float, required=True)
@click.option('--score', 'score_kind', type=SCORER_CHOICES, default='standard')
@click.option('--model', type=MODEL_CHOICES, default='knn_mean')
@click.option('--k', 'k', type=int, default=5, help='Neighbours for k-NN models')
@click.option('--p-lo', type=float, default=None, help='Lower quantile level for cqr')
@click.option('--p-hi', type=float, default=None, help='Upper quantile level for cqr')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None, help='CSV path (stdout if omitted)')
def predict(train_path, calib_path, test_path, alpha, score_kind, model, k, p_lo, p_hi, out_path):
    """Fit on train, calibrate on calib, write one prediction interval per test row"""
    processor = CSVProcessor()
    features, train = processor.load_dataset(train_path)
    calib_features, calib = processor.load_dataset(calib_path)
    processor.validator.check_same_features(features, calib_features, calib_path)
    test_features, X_test, y_test = processor.load_regression_table(test_path, require_response=False)
    processor.validator.check_same_features(features, test_features, test_path)

    levels: Optional[tuple] = None
    if p_lo is not None or p_hi is not None:
        if p_lo is None or p_hi is None:
            raise click.UsageError("--p-lo and --p-hi must be given together")
        levels = (p_lo, p_hi)

    scorer = build_scorer(score_kind, ModelSpec(kind=model, k=k), train, alpha, levels)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        predictor = calibrate(scorer, calib, alpha)
        lower, upper = predict_intervals(predictor, X_test)
    _report_warnings(caught)

    covered = None
    if y_test is not None:
        covered = coverage_indicators(predictor, Dataset(predictors=X_test, response=y_test))
    processor.write_intervals(lower, upper, covered, out_path)

    console.success(
        f"Calibrated on n={predictor.params.n} (threshold {predictor.threshold:.6g}); "
        f"{len(lower)} interval(s) written"
    )


def main():
    """Entry point for the application"""
    cli()


if __name__ == "__main__":
    main()
