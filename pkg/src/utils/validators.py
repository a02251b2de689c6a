# src\utils\validators.py
"""
Validation Module
Checks numeric parameters and CSV column schemas
"""

import math
import numbers
import re
from typing import List, Optional, Sequence, Tuple

from src.exceptions import SchemaMismatch


def validate_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def validate_unit_open(value, name: str) -> float:
    """Require a real in the open interval (0, 1)."""
    if not isinstance(value, numbers.Real) or not math.isfinite(value) or not 0.0 < value < 1.0:
        raise ValueError(f"{name} must lie in (0, 1), got {value!r}")
    return float(value)


def validate_alpha(alpha) -> float:
    return validate_unit_open(alpha, "alpha")


class ColumnValidator:
    def __init__(self):
        # Column name patterns
        self.patterns = {
            'feature': re.compile(r'^x(\d+)$'),     # x1, x2, ...
            'response': re.compile(r'^y$'),         # y
        }

    def feature_columns(self, header: Sequence[str]) -> List[str]:
        """Feature columns ordered by index; must be exactly x1..xd"""
        indexed = []
        for name in header:
            match = self.patterns['feature'].match(name.strip())
            if match:
                indexed.append((int(match.group(1)), name))
        indexed.sort()
        expected = list(range(1, len(indexed) + 1))
        if not indexed or [i for i, _ in indexed] != expected:
            raise SchemaMismatch(
                f"feature columns must be x1..xd, found {[name for _, name in indexed]}"
            )
        return [name for _, name in indexed]

    def has_response(self, header: Sequence[str]) -> bool:
        return any(self.patterns['response'].match(name.strip()) for name in header)

    def validate_and_suggest(
        self, header: Sequence[str], require_response: bool
    ) -> Tuple[Optional[List[str]], Optional[str]]:
        """
        Validate a CSV header and provide a suggestion if invalid
        Returns: (feature_columns, suggestion)
        """
        try:
            features = self.feature_columns(header)
        except SchemaMismatch as e:
            return None, f"{e}. Try a header like: x1,x2,...,y"

        unknown = [
            name for name in header
            if not any(p.match(name.strip()) for p in self.patterns.values())
        ]
        if unknown:
            return None, f"Unexpected columns {unknown}. Only x1..xd and y are allowed"

        if require_response and not self.has_response(header):
            return None, "Missing response column 'y'"

        return features, None

    def check_same_features(self, reference: Sequence[str], other: Sequence[str], label: str):
        if list(reference) != list(other):
            raise SchemaMismatch(
                f"{label} has features {list(other)}, expected {list(reference)}"
            )
