"""Verification campaigns over many graphs.

Each graph is checked in a worker thread; all checks are pure functions of
the graph, so workers share nothing but the logger. Records come back in
graph-index order regardless of completion order.
"""
import concurrent.futures
from dataclasses import dataclass, replace
from typing import List, Optional

from config.settings import get_settings
from graphs.connectivity import edge_connectivity
from graphs.models import DiscreteGraph, MetricGraph
from harness.ensembles import EnsembleMember
from quantum.bounds import (
    check_conjecture,
    check_metric_cheeger_range,
    check_nicaise_bounds,
    metric_quantities
)
from reports.aggregator import ReportAggregator
from reports.models import BoundReport, CampaignSummary, GraphRecord, graph_digest
from spectral.bounds import check_alon_milman, check_fiedler_bounds
from spectral.cheeger import discrete_cheeger
from spectral.laplacian import fiedler_value
from utils.exceptions import CheegerError
from utils.logger import get_logger, set_graph_context

logger = get_logger()


def discrete_reports(g: DiscreteGraph, prefix: str = "") -> List[BoundReport]:
    """Fiedler and Alon-Milman checks; empty below two vertices."""
    if g.vertex_count < 2:
        return []
    reports = [check_fiedler_bounds(g), check_alon_milman(g)]
    if prefix:
        reports = [replace(r, inequality=prefix + r.inequality) for r in reports]
    return reports


def verify_discrete(g: DiscreteGraph, index: int = 0) -> GraphRecord:
    record = GraphRecord(index, g.name, "discrete", graph_digest(g), g.to_dict())
    record.reports = discrete_reports(g)
    if g.vertex_count >= 2:
        cheeger = discrete_cheeger(g)
        record.quantities = {
            "h": float(cheeger.value),
            "h_exact": f"{cheeger.value.numerator}/{cheeger.value.denominator}",
            "lambda1": fiedler_value(g),
            "edge_connectivity": edge_connectivity(g),
            "deg_max": g.max_degree(),
            "S": list(cheeger.witness_set),
        }
    return record


def verify_metric(
    g: MetricGraph,
    index: int = 0,
    max_cuts_per_edge: Optional[int] = None,
    target_rel_tol: Optional[float] = None
) -> GraphRecord:
    """Metric checks plus the discrete checks on the loop-free shadow."""
    record = GraphRecord(index, g.name, "metric", graph_digest(g), g.to_dict())
    q = metric_quantities(g, max_cuts_per_edge, target_rel_tol)

    reports = [check_metric_cheeger_range(g, q)]
    reports += check_nicaise_bounds(g, q)
    reports.append(check_conjecture(g, q))

    quantities = {
        "h_metric": q.h,
        "h_metric_exact": f"{q.cheeger.exact.numerator}/{q.cheeger.exact.denominator}",
        "lambda1": q.lambda1,
        "lambda1_finest": q.spectrum.lambda1,
        "lambda1_converged": q.spectrum.converged,
        "L": q.length,
        "E": q.essential_edges,
        "E_raw": g.edge_count,
        "cheeger_witness": q.cheeger.to_dict(),
    }

    shadow = g.discrete_shadow()
    if shadow.vertex_count >= 2:
        reports += discrete_reports(shadow, prefix="shadow_")
        quantities["h_discrete"] = float(discrete_cheeger(shadow).value)
        quantities["lambda1_discrete"] = fiedler_value(shadow)

    record.reports = reports
    record.quantities = quantities
    return record


@dataclass
class CampaignResult:
    records: List[GraphRecord]
    summary: CampaignSummary

    @property
    def exit_code(self) -> int:
        """0 clean, 1 assertable violation, 2 when a graph could not be processed."""
        if self.summary.failed_count:
            return 2
        return 1 if self.summary.has_assertable_violation else 0


class CampaignOrchestrator:
    """Runs the checks over ensemble members concurrently."""

    def __init__(
        self,
        max_workers: Optional[int] = None,
        max_cuts_per_edge: Optional[int] = None,
        target_rel_tol: Optional[float] = None
    ):
        self.max_workers = max_workers or get_settings().max_workers
        self.max_cuts_per_edge = max_cuts_per_edge
        self.target_rel_tol = target_rel_tol
        self.aggregator = ReportAggregator()

    def run(self, members: List[EnsembleMember]) -> CampaignResult:
        records: List[GraphRecord] = []

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_member = {
                executor.submit(self.process_member, member): member
                for member in members
            }

            for future in concurrent.futures.as_completed(future_to_member):
                member = future_to_member[future]
                try:
                    records.append(future.result())
                except Exception as e:
                    logger.error(f"Critical error processing graph {member.index}: {e}")
                    records.append(self._failed(member, e))

        records.sort(key=lambda r: r.index)
        summary = self.aggregator.aggregate(records)
        return CampaignResult(records, summary)

    def process_member(self, member: EnsembleMember) -> GraphRecord:
        """Check one graph; computation errors become a failed record."""
        g = member.graph
        set_graph_context(g.name or str(member.index))
        try:
            if isinstance(g, MetricGraph):
                record = verify_metric(g, member.index, self.max_cuts_per_edge, self.target_rel_tol)
            else:
                record = verify_discrete(g, member.index)
            record.quantities["parameters"] = dict(member.parameters)
            violations = record.assertable_violations
            if violations:
                logger.warning(f"{len(violations)} assertable violation(s): {[r.inequality for r in violations]}")
            else:
                logger.info(f"{len(record.reports)} checks, no assertable violation")
            return record
        except CheegerError as e:
            logger.error(f"Failed: {e}")
            return self._failed(member, e)
        finally:
            set_graph_context(None)

    def _failed(self, member: EnsembleMember, error: Exception) -> GraphRecord:
        g = member.graph
        kind = "metric" if isinstance(g, MetricGraph) else "discrete"
        return GraphRecord(member.index, g.name, kind, graph_digest(g), g.to_dict(), error=str(error))
