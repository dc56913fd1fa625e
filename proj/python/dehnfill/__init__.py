"""Slope norms and complexity bounds for even Dehn fillings.

Datasets may be passed as a JSON string or an already-decoded dict.
Reports come back as dicts with the same keys as the CLI's --json output.
"""

import json
from pathlib import Path

from ._dehnfill import (
    DehnfillError,
    basic_gap,
    bounds,
    canonical_dataset,
    canonical_triangle,
    constantgap,
    even_distance,
    family,
    fib_min_ell,
    ideal_gap,
    knotbasic_gap,
    layering_plan,
    normalize_slope,
    render,
    resolve_patterns,
    slope_from_pattern,
    slope_norm,
    tree_distance,
    validate,
)


def load(path):
    """Read a dataset file into a dict."""
    return json.loads(Path(path).read_text())


__all__ = [
    "DehnfillError",
    "basic_gap",
    "bounds",
    "canonical_dataset",
    "canonical_triangle",
    "constantgap",
    "even_distance",
    "family",
    "fib_min_ell",
    "ideal_gap",
    "knotbasic_gap",
    "layering_plan",
    "load",
    "normalize_slope",
    "render",
    "resolve_patterns",
    "slope_from_pattern",
    "slope_norm",
    "tree_distance",
    "validate",
]
