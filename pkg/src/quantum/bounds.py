"""Checks of the metric-graph estimates.

range:        2 / L <= h <= 2 E / L
sandwich:     max(h^2 / 4, pi^2 h^2 / (4 E^2)) <= lambda_1 <= pi^2 E^2 h^2 / 4
conjecture:   pi^2 h^2 / 4 <= lambda_1   (informational)

E counts essential edges, i.e. edges left after suppressing degree-2
vertices. Spectral comparisons use the extrapolated lambda_1.
"""
import math
from dataclasses import dataclass
from typing import List, Optional

from .cheeger import MetricCheegerResult, metric_cheeger
from .fem import GeneralizedEigenResult, lambda1_metric
from config.settings import get_settings
from graphs.models import MetricGraph, SmoothingResult
from graphs.topology import smooth_degree_two, total_length
from reports.models import BoundReport, BoundStatus, graph_digest
from utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class MetricQuantities:
    """h, lambda_1 and essential edges of one metric graph, computed once."""
    graph: MetricGraph
    cheeger: MetricCheegerResult
    spectrum: GeneralizedEigenResult
    smoothing: SmoothingResult
    length: float
    digest: str

    @property
    def h(self) -> float:
        return self.cheeger.value

    @property
    def lambda1(self) -> float:
        return self.spectrum.extrapolated

    @property
    def essential_edges(self) -> int:
        return self.smoothing.essential_edge_count

    def spectral_tolerance(self, scale: float) -> float:
        """Relative bound tolerance plus solver tolerance and discretization gap."""
        settings = get_settings()
        gap = abs(self.spectrum.lambda1 - self.lambda1) / self.lambda1
        return (settings.bound_rel_tol + settings.fem_target_rel_tol + gap) * scale


def metric_quantities(
    g: MetricGraph,
    max_cuts_per_edge: Optional[int] = None,
    target_rel_tol: Optional[float] = None
) -> MetricQuantities:
    return MetricQuantities(
        graph=g,
        cheeger=metric_cheeger(g, max_cuts_per_edge),
        spectrum=lambda1_metric(g, target_rel_tol),
        smoothing=smooth_degree_two(g),
        length=total_length(g),
        digest=graph_digest(g),
    )


def check_metric_cheeger_range(g: MetricGraph, quantities: Optional[MetricQuantities] = None) -> BoundReport:
    """2/L <= h <= 2E/L; the upper side is not-applicable when the reduction has a loop."""
    q = quantities or metric_quantities(g)
    settings = get_settings()
    h, length, essential = q.h, q.length, q.essential_edges
    lower = 2.0 / length
    upper = 2.0 * essential / length

    looped = q.smoothing.has_loop
    report = BoundReport.evaluate(
        "metric_cheeger_range",
        middle=h,
        lhs=lower,
        rhs=upper,
        tolerance=settings.bound_rel_tol * max(h, upper),
        upper_applicable=not looped,
        quantities={"h": h, "L": length, "E": essential, "upper_bound": upper},
        digest=q.digest,
        note="reduced graph has a loop: upper estimate not applicable" if looped else "",
    )
    logger.debug(f"metric_cheeger_range: {lower:.6g} <= {h:.6g} <= {upper:.6g} -> {report.status.value}")
    return report


def _sandwich(q: MetricQuantities, edge_count: int, inequality: str, assertable: bool, note: str) -> BoundReport:
    h, lam = q.h, q.lambda1
    lower = max(h * h / 4.0, math.pi ** 2 * h * h / (4.0 * edge_count ** 2))
    upper = math.pi ** 2 * edge_count ** 2 * h * h / 4.0
    report = BoundReport.evaluate(
        inequality,
        middle=lam,
        lhs=lower,
        rhs=upper,
        tolerance=q.spectral_tolerance(max(lam, upper)),
        assertable=assertable,
        quantities={"h": h, "lambda1": lam, "lambda1_finest": q.spectrum.lambda1, "E": edge_count},
        digest=q.digest,
        note=note,
    )
    logger.debug(f"{inequality}: {lower:.6g} <= {lam:.6g} <= {upper:.6g} -> {report.status.value}")
    return report


def check_nicaise_bounds(g: MetricGraph, quantities: Optional[MetricQuantities] = None) -> List[BoundReport]:
    """Two-sided lambda_1 estimate under both edge-count conventions.

    The essential (smoothed) count is authoritative; the raw edge count is
    reported alongside and a violation under it is only logged.
    """
    q = quantities or metric_quantities(g)
    smoothed = _sandwich(q, q.essential_edges, "lambda1_sandwich", True, "E after degree-2 smoothing")
    raw = _sandwich(q, g.edge_count, "lambda1_sandwich_raw", False, "E = edges as given")
    if raw.status == BoundStatus.VIOLATED:
        logger.warning(f"lambda_1 sandwich fails with raw edge count E = {g.edge_count}")
    return [smoothed, raw]


def check_conjecture(g: MetricGraph, quantities: Optional[MetricQuantities] = None) -> BoundReport:
    """pi^2 h^2 / 4 <= lambda_1, reported but never asserted."""
    q = quantities or metric_quantities(g)
    h, lam = q.h, q.lambda1
    lower = math.pi ** 2 * h * h / 4.0
    report = BoundReport.evaluate(
        "conjecture",
        middle=lam,
        lhs=lower,
        tolerance=q.spectral_tolerance(max(lam, lower)),
        assertable=False,
        quantities={"h": h, "lambda1": lam},
        digest=q.digest,
    )
    if report.status == BoundStatus.VIOLATED:
        logger.warning(f"conjecture pi^2 h^2 / 4 <= lambda_1 fails: {lower:.10g} > {lam:.10g}")
    return report
