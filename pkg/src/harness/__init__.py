"""Graph families, random ensembles and parameter scans."""
from .families import FamilySpec, FAMILY_KINDS, generate_family, numbered_ids
from .ensembles import (
    DiscreteEnsemble,
    MetricEnsemble,
    EnsembleMember,
    generate_random,
    discrete_ensemble,
    metric_ensemble
)
from .scan import ScanRow, SCAN_COLUMNS, scan_dumbbell, parse_range, parse_values

__all__ = [
    "FamilySpec",
    "FAMILY_KINDS",
    "generate_family",
    "numbered_ids",
    "DiscreteEnsemble",
    "MetricEnsemble",
    "EnsembleMember",
    "generate_random",
    "discrete_ensemble",
    "metric_ensemble",
    "ScanRow",
    "SCAN_COLUMNS",
    "scan_dumbbell",
    "parse_range",
    "parse_values"
]
