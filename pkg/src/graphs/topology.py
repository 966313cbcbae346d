"""Connectivity, degree-2 smoothing and length operations."""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

import networkx as nx

from .models import DiscreteGraph, MetricEdge, MetricGraph, SmoothingResult
from .validation import ensure_valid
from utils.exceptions import DisconnectedGraphError, GraphError
from utils.logger import get_logger

logger = get_logger()

Graph = Union[DiscreteGraph, MetricGraph]


def to_networkx(g: Graph) -> nx.MultiGraph:
    """MultiGraph view; metric edges keyed by id, discrete edges by position."""
    nx_graph = nx.MultiGraph()
    nx_graph.add_nodes_from(g.vertices)
    if isinstance(g, MetricGraph):
        for e in g.edges:
            nx_graph.add_edge(e.u, e.v, key=e.id, length=e.length)
    else:
        for i, (u, v) in enumerate(g.edges):
            nx_graph.add_edge(u, v, key=i)
    return nx_graph


def component_count(g: Graph) -> int:
    """Number of connected components; an isolated vertex is a component."""
    if not g.vertices:
        return 0
    return nx.number_connected_components(to_networkx(g))


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component."""
    return component_count(g) == 1


def require_connected(g: Graph) -> None:
    count = component_count(g)
    if count != 1:
        raise DisconnectedGraphError(count)


def total_length(g: MetricGraph) -> float:
    """Exact (correctly rounded) sum of edge lengths."""
    return math.fsum(e.length for e in g.edges)


@dataclass
class _Chain:
    """Edge of the graph under reduction, remembering suppressed vertices."""
    id: str
    u: str
    v: str
    length: float
    interior: List[str] = field(default_factory=list)

    def other(self, x: str) -> str:
        return self.v if self.u == x else self.u


def smooth_degree_two(g: MetricGraph) -> SmoothingResult:
    """Suppress degree-2 vertices until none is left.

    A vertex is suppressible when its two incident edge-ends belong to two
    distinct edges; a vertex carrying a single loop and nothing else anchors
    that loop and stays. Vertices are suppressed largest identifier first, so a
    pure cycle collapses onto its smallest vertex.
    """
    ensure_valid(g)
    require_connected(g)

    chains = [_Chain(e.id, e.u, e.v, e.length) for e in g.edges]
    alive = set(g.vertices)

    while True:
        incidences: Dict[str, List[int]] = {v: [] for v in alive}
        for i, c in enumerate(chains):
            incidences[c.u].append(i)
            incidences[c.v].append(i)

        candidates = [
            v for v, inc in incidences.items()
            if len(inc) == 2 and inc[0] != inc[1]
        ]
        if not candidates:
            break

        x = max(candidates)
        i, j = sorted(incidences[x])
        first, second = chains[i], chains[j]
        merged = _Chain(
            id=f"{first.id}+{second.id}",
            u=first.other(x),
            v=second.other(x),
            length=first.length + second.length,
            interior=first.interior + [x] + second.interior,
        )
        chains[i] = merged
        del chains[j]
        alive.discard(x)
        logger.debug(f"Suppressed degree-2 vertex {x} into edge {merged.id}")

    vertex_map = {x: c.id for c in chains for x in c.interior}
    reduced = MetricGraph(
        [v for v in g.vertices if v in alive],
        [MetricEdge(c.id, c.u, c.v, c.length) for c in chains],
        g.name,
    )
    return SmoothingResult(reduced, len(chains), vertex_map)


def subdivide_edge(
    g: MetricGraph,
    edge_id: str,
    fraction: float = 0.5,
    new_vertex: Optional[str] = None
) -> MetricGraph:
    """Insert a degree-2 vertex at fraction * length along an edge."""
    if not 0.0 < fraction < 1.0:
        raise GraphError(f"subdivision fraction must lie in (0, 1), got {fraction}")
    target = g.edge(edge_id)
    vertex = new_vertex or f"{edge_id}_mid"
    if vertex in g.vertices:
        raise GraphError(f"vertex '{vertex}' already exists")

    head = target.length * fraction
    edges = []
    for e in g.edges:
        if e.id == edge_id:
            edges.append(MetricEdge(f"{e.id}a", e.u, vertex, head))
            edges.append(MetricEdge(f"{e.id}b", vertex, e.v, e.length - head))
        else:
            edges.append(e)
    return MetricGraph(list(g.vertices) + [vertex], edges, g.name)


def scale_lengths(g: MetricGraph, factor: float) -> MetricGraph:
    """Multiply every edge length by a positive factor."""
    if not factor > 0:
        raise GraphError(f"scale factor must be positive, got {factor}")
    edges = [MetricEdge(e.id, e.u, e.v, e.length * factor) for e in g.edges]
    return MetricGraph(g.vertices, edges, g.name)
