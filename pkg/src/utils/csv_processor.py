# src\utils\csv_processor.py
"""
CSV Processing Module
Reads regression datasets and writes pmf, coverage and interval tables
"""

import sys
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from src.exceptions import SchemaMismatch
from src.models.data_models import CsvTable, Dataset, FiniteHorizonPmf, ReplicationSummary
from .validators import ColumnValidator


class CSVProcessor:
    def __init__(self):
        self.validator = ColumnValidator()

    def load_table(self, csv_path: str) -> CsvTable:
        """Load a numeric CSV file with a header row"""
        path = Path(csv_path)
        if not path.exists():
            raise SchemaMismatch(f"File not found: {csv_path}")

        # Try different encodings
        encodings = ['utf-8', 'iso-8859-1']
        df = None
        for encoding in encodings:
            try:
                df = pd.read_csv(path, encoding=encoding)
                break
            except UnicodeDecodeError:
                continue
            except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
                raise SchemaMismatch(f"Could not parse {csv_path}: {e}")

        if df is None:
            raise SchemaMismatch(f"Could not read {csv_path} with any supported encoding")

        try:
            values = df.apply(pd.to_numeric, errors='raise').to_numpy(dtype=float)
        except (ValueError, TypeError) as e:
            raise SchemaMismatch(f"{csv_path} contains non-numeric cells: {e}")

        try:
            return CsvTable(header=[str(c).strip() for c in df.columns], rows=values.tolist())
        except ValueError as e:
            raise SchemaMismatch(f"{csv_path}: {e}")

    def load_regression_table(
        self, csv_path: str, require_response: bool = True
    ) -> Tuple[List[str], np.ndarray, Optional[np.ndarray]]:
        """
        Load x1..xd (and y) columns
        Returns: (feature_columns, predictors, response or None)
        """
        table = self.load_table(csv_path)
        features, suggestion = self.validator.validate_and_suggest(table.header, require_response)
        if features is None:
            raise SchemaMismatch(f"{csv_path}: {suggestion}")

        predictors = np.array([table.column(name) for name in features], dtype=float).T
        predictors = predictors.reshape(len(table.rows), len(features))
        response = None
        if self.validator.has_response(table.header):
            response = np.array(table.column('y'), dtype=float)
        return features, predictors, response

    def load_dataset(self, csv_path: str) -> Tuple[List[str], Dataset]:
        features, predictors, response = self.load_regression_table(csv_path, require_response=True)
        if response is None or len(response) == 0:
            raise SchemaMismatch(f"{csv_path} has no data rows")
        return features, Dataset(predictors=predictors, response=response)

    def write_frame(self, df: pd.DataFrame, out_path: Optional[str] = None):
        """Write CSV (UTF-8, header row, full float precision) to a file or stdout"""
        if out_path is None:
            sys.stdout.write(df.to_csv(index=False, lineterminator='\n'))
            return
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, index=False, encoding='utf-8', lineterminator='\n')

    def write_pmf(self, pmf: FiniteHorizonPmf, out_path: Optional[str] = None):
        k = np.arange(pmf.m + 1)
        df = pd.DataFrame({
            'k': k,
            'coverage': k / pmf.m,
            'probability': pmf.probabilities,
        })
        self.write_frame(df, out_path)

    def write_coverages(self, summary: ReplicationSummary, out_path: Optional[str] = None):
        df = pd.DataFrame({
            'replication': np.arange(summary.replications),
            'successes': summary.successes,
            'coverage': summary.coverages,
        })
        self.write_frame(df, out_path)

    def write_intervals(
        self,
        lower: np.ndarray,
        upper: np.ndarray,
        covered: Optional[np.ndarray] = None,
        out_path: Optional[str] = None,
    ):
        columns = {'lower': lower, 'upper': upper}
        if covered is not None:
            columns['covered'] = covered.astype(int)
        self.write_frame(pd.DataFrame(columns), out_path)
