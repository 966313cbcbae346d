"""Invariant checks for graph data models."""
import math
from typing import List, Union

from .models import DiscreteGraph, MetricGraph, ValidationReport
from utils.exceptions import GraphValidationError

Graph = Union[DiscreteGraph, MetricGraph]


def validate(g: Graph) -> ValidationReport:
    """List every invariant violation of a discrete or metric graph."""
    violations: List[str] = []

    if not g.vertices:
        violations.append("graph has no vertices")

    seen = set()
    for v in g.vertices:
        if v in seen:
            violations.append(f"duplicate vertex '{v}'")
        seen.add(v)

    if isinstance(g, DiscreteGraph):
        for i, (u, v) in enumerate(g.edges):
            _check_endpoints(violations, f"edges[{i}]", u, v, seen)
            if u == v:
                violations.append(f"edges[{i}] ({u}, {v}): loop forbidden on discrete side")
        return ValidationReport(tuple(violations), "discrete")

    if not g.edges:
        violations.append("metric graph has no edges")

    edge_ids = set()
    total = 0.0
    for i, e in enumerate(g.edges):
        label = f"edge '{e.id}' (edges[{i}])"
        if e.id in edge_ids:
            violations.append(f"{label}: duplicate edge id")
        edge_ids.add(e.id)
        _check_endpoints(violations, label, e.u, e.v, seen)
        if not math.isfinite(e.length):
            violations.append(f"{label}: non-finite length {e.length}")
        elif e.length <= 0:
            violations.append(f"{label}: nonpositive length {e.length}")
        else:
            total += e.length

    if not math.isfinite(total):
        violations.append("total length is not finite")

    return ValidationReport(tuple(violations), "metric")


def ensure_valid(g: Graph) -> None:
    """Raise GraphValidationError unless the graph is admissible."""
    report = validate(g)
    if not report.is_valid:
        raise GraphValidationError(list(report.violations))


def _check_endpoints(violations: List[str], label: str, u: str, v: str, vertices: set) -> None:
    for endpoint in (u, v):
        if endpoint not in vertices:
            violations.append(f"{label}: endpoint '{endpoint}' is not a declared vertex")
