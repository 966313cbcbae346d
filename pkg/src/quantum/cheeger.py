"""Exact Cheeger constant of a metric graph by cut-configuration enumeration.

h(Gamma) = min |dS| / min(|S|, L - |S|) over measurable S. An optimal S is
bounded by finitely many cut points, at most two on any edge, so h is the
minimum over multiplicity patterns c_e in {0, .., max_cuts} of the best
balancing of that pattern. Patterns are visited by increasing total cut count
k; since no pattern can beat k / (L/2), enumeration stops once that bound
exceeds the best ratio found.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cuts import CutConfiguration, PreparedGraph, Side
from config.settings import get_settings
from graphs.models import MetricGraph
from graphs.topology import require_connected
from graphs.validation import ensure_valid
from utils.exceptions import GuardExceededError, ValidationError
from utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class CutPoint:
    """Cut at distance t from the first endpoint of an edge."""
    edge: str
    t: float


@dataclass(frozen=True)
class MetricCheegerResult:
    """h(Gamma) with a witness configuration and cut positions."""
    value: float
    exact: Fraction
    k: int
    cuts: Tuple[CutPoint, ...]
    configuration: CutConfiguration
    attained_measure: float
    s_components: Tuple[dict, ...]

    def __float__(self) -> float:
        return self.value

    def to_dict(self) -> dict:
        return {
            "h": self.value,
            "h_exact": f"{self.exact.numerator}/{self.exact.denominator}",
            "k": self.k,
            "cuts": [{"edge": c.edge, "t": c.t} for c in self.cuts],
            "S_components": list(self.s_components),
            "measure": self.attained_measure,
        }


@dataclass
class _Best:
    pattern: Tuple[int, ...]
    labels: List[int]
    colors: List[int]
    a_min: int
    s2: int
    d2: int


def _patterns(edge_count: int, max_cuts: int):
    patterns = [
        p for p in itertools.product(range(max_cuts + 1), repeat=edge_count)
        if any(p)
    ]
    patterns.sort(key=lambda p: (sum(p), p))
    return patterns


def metric_cheeger(g: MetricGraph, max_cuts_per_edge: Optional[int] = None) -> MetricCheegerResult:
    """Compute h(Gamma) exactly.

    Every pattern has at most two effective colorings (a coloring and its
    swap); the one placing the first vertex class in S is canonical. Ties
    keep the first pattern in (k, multiplicities) order.

    Raises:
        GuardExceededError: more edges than metric.max_edges
        DisconnectedGraphError: graph is not connected
    """
    ensure_valid(g)
    require_connected(g)
    settings = get_settings()
    if g.edge_count > settings.metric_max_edges:
        raise GuardExceededError(
            f"metric Cheeger enumeration limited to {settings.metric_max_edges} edges, got {g.edge_count}"
        )
    max_cuts = settings.max_cuts_per_edge if max_cuts_per_edge is None else max_cuts_per_edge
    if max_cuts < 1:
        raise ValidationError("max cuts per edge must be at least 1")

    prepared = PreparedGraph(g)
    best: Optional[_Best] = None
    visited = 0

    for pattern in _patterns(g.edge_count, max_cuts):
        k = sum(pattern)
        # k / (L/2) lower-bounds every pattern with k cuts
        if best is not None and k * best.d2 > sum(best.pattern) * prepared.total_units:
            break
        visited += 1

        labels, count = prepared.vertex_classes(pattern)
        colors = prepared.propagate_coloring(pattern, labels, count)
        if colors is None:
            continue

        a_min = sum(
            units
            for units, (a, _), cuts in zip(prepared.units, prepared.ends, pattern)
            if cuts == 0 and colors[labels[a]] == 0
        )
        s2, d2, _ = prepared.balance(pattern, a_min)
        if d2 <= 0:
            continue
        if best is None or k * best.d2 < sum(best.pattern) * d2:
            best = _Best(pattern, labels, colors, a_min, s2, d2)

    if best is None:
        raise ValidationError(f"no feasible cut configuration with at most {max_cuts} cuts per edge")

    result = _build_result(prepared, best)
    logger.debug(
        f"Metric Cheeger h = {result.exact} (k={result.k}, pattern {best.pattern}, {visited} patterns visited)"
    )
    return result


def _fragment_colors(colors: List[int], labels: List[int], ends, pattern) -> Dict[Tuple[int, int], int]:
    out: Dict[Tuple[int, int], int] = {}
    for index, ((a, _), cuts) in enumerate(zip(ends, pattern)):
        for position in range(cuts + 1):
            out[(index, position)] = colors[labels[a]] ^ (position % 2)
    return out


def _build_result(prepared: PreparedGraph, best: _Best) -> MetricCheegerResult:
    g = prepared.graph
    pattern = best.pattern
    k = sum(pattern)
    fragment_colors = _fragment_colors(best.colors, best.labels, prepared.ends, pattern)

    # Full coloring: vertex classes, then floating fragments in (edge, position) order
    coloring = [Side.from_code(c) for c in best.colors]
    floating = []
    for index, cuts in enumerate(pattern):
        for position in range(1, cuts):
            coloring.append(Side.from_code(fragment_colors[(index, position)]))
            floating.append((index, position))
    configuration = CutConfiguration(pattern, tuple(coloring))

    # Slack fills the cut edges greedily in edge-list order, each up to its length
    slack = Fraction(best.s2 - 2 * best.a_min, 2 * prepared.scale)

    cuts: List[CutPoint] = []
    for index, (edge, cuts_here) in enumerate(zip(g.edges, pattern)):
        if not cuts_here:
            continue
        length = Fraction(edge.length)
        in_s = min(slack, length)
        slack -= in_s
        positions = range(cuts_here + 1)
        s_pieces = [p for p in positions if fragment_colors[(index, p)] == 0]
        c_pieces = [p for p in positions if fragment_colors[(index, p)] == 1]
        t = Fraction(0)
        for p in range(cuts_here):
            if p in s_pieces:
                t += in_s / len(s_pieces)
            else:
                t += (length - in_s) / len(c_pieces)
            cuts.append(CutPoint(edge.id, float(t)))

    s_components: List[dict] = []
    class_vertices: Dict[int, List[str]] = {}
    for v, label in zip(g.vertices, best.labels):
        class_vertices.setdefault(label, []).append(v)
    for label, color in enumerate(best.colors):
        if color == 0:
            s_components.append({"vertices": class_vertices[label]})
    for index, position in floating:
        if fragment_colors[(index, position)] == 0:
            s_components.append({"edge": g.edges[index].id, "fragment": position})

    exact = prepared.ratio(k, best.d2)
    return MetricCheegerResult(
        value=float(exact),
        exact=exact,
        k=k,
        cuts=tuple(cuts),
        configuration=configuration,
        attained_measure=float(prepared.measure(best.d2, doubled=True)),
        s_components=tuple(s_components),
    )
