# src\utils\config.py
"""
Configuration Module
Loads settings from an explicit YAML file and environment values from an
explicit .env file; nothing is discovered implicitly
"""

import os
from pathlib import Path
from typing import Dict, List, Optional

import yaml
from dotenv import dotenv_values
from pydantic import BaseModel, Field

from src.models.data_models import ModelKind, ScorerKind

THREADS_ENV = "COVPLAN_THREADS"


class PlannerSettings(BaseModel):
    n_max: int = Field(default=10**6, ge=1)
    step: int = Field(default=1, ge=1)


class SimulationSettings(BaseModel):
    r: int = Field(default=100, ge=1)
    n: int = Field(default=10, ge=1)
    m: int = Field(default=500, ge=1)
    alpha: float = Field(default=0.2, gt=0.0, lt=1.0)
    replications: int = Field(default=2000, ge=1)
    seed: int = Field(default=7, ge=0)
    scorer: ScorerKind = "standard"
    model: ModelKind = "knn_mean"
    k: int = Field(default=5, ge=1)
    chunksize: int = Field(default=16, ge=1)


class LimitSettings(BaseModel):
    grid: List[float] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    quantiles: List[float] = [0.05, 0.5, 0.95]


class OutputSettings(BaseModel):
    color: bool = True
    progress: bool = True


class AppConfig(BaseModel):
    planner: PlannerSettings = PlannerSettings()
    simulation: SimulationSettings = SimulationSettings()
    limit: LimitSettings = LimitSettings()
    output: OutputSettings = OutputSettings()


def load_config(path: Optional[str] = None) -> AppConfig:
    """Built-in defaults, overridden by the YAML file when one is given"""
    if path is None:
        return AppConfig()
    with open(Path(path), 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}
    return AppConfig.model_validate(data)


def load_environment(env_file: Optional[str] = None) -> Dict[str, str]:
    """Values from the .env file, overridden by the process environment"""
    values: Dict[str, str] = {}
    if env_file is not None:
        values.update({k: v for k, v in dotenv_values(env_file).items() if v is not None})
    values.update(os.environ)
    return values


def resolve_workers(requested: Optional[int], environment: Dict[str, str]) -> int:
    """Worker count for the simulation, capped by COVPLAN_THREADS when set"""
    workers = requested if requested is not None else (os.cpu_count() or 1)
    cap = environment.get(THREADS_ENV)
    if cap:
        try:
            cap_value = int(cap)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {cap!r}")
        if cap_value < 1:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {cap!r}")
        workers = min(workers, cap_value)
    return max(1, workers)
