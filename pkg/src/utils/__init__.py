# src\utils\__init__.py
"""Utility functions and helpers"""

from .validators import ColumnValidator, validate_alpha, validate_positive_int, validate_unit_open
from .csv_processor import CSVProcessor
from .config import AppConfig, load_config, load_environment, resolve_workers

__all__ = [
    'ColumnValidator', 'validate_alpha', 'validate_positive_int', 'validate_unit_open',
    'CSVProcessor', 'AppConfig', 'load_config', 'load_environment', 'resolve_workers',
]
