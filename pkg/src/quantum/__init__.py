"""Metric graphs: exact Cheeger constant, lambda_1 of the standard Laplacian, estimates."""
from .cuts import (
    Side,
    CutConfiguration,
    CutComponent,
    ComponentStructure,
    ConfigurationEvaluation,
    components_after_cuts,
    evaluate_configuration
)
from .cheeger import CutPoint, MetricCheegerResult, metric_cheeger
from .grid_oracle import metric_cheeger_grid_oracle, grid_cheeger_exact
from .fem import Mesh, GeneralizedEigenResult, assemble, solve_mesh, lambda1_metric
from .analytic import analytic_lambda1
from .bounds import (
    MetricQuantities,
    metric_quantities,
    check_metric_cheeger_range,
    check_nicaise_bounds,
    check_conjecture
)

__all__ = [
    "Side",
    "CutConfiguration",
    "CutComponent",
    "ComponentStructure",
    "ConfigurationEvaluation",
    "components_after_cuts",
    "evaluate_configuration",
    "CutPoint",
    "MetricCheegerResult",
    "metric_cheeger",
    "metric_cheeger_grid_oracle",
    "grid_cheeger_exact",
    "Mesh",
    "GeneralizedEigenResult",
    "assemble",
    "solve_mesh",
    "lambda1_metric",
    "analytic_lambda1",
    "MetricQuantities",
    "metric_quantities",
    "check_metric_cheeger_range",
    "check_nicaise_bounds",
    "check_conjecture"
]
