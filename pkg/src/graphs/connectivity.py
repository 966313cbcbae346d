"""Edge connectivity e(G) of a discrete multigraph."""
from itertools import combinations
from typing import List, Sequence, Tuple

import networkx as nx

from .models import DiscreteGraph
from .topology import require_connected
from .validation import ensure_valid
from utils.exceptions import GraphError, ValidationError
from utils.logger import get_logger

logger = get_logger()

METHODS = ("maxflow", "exhaustive")


def edge_connectivity(g: DiscreteGraph, method: str = "maxflow") -> int:
    """Minimum number of edges whose removal disconnects the graph.

    Args:
        g: Connected discrete graph with at least two vertices
        method: "maxflow" (min over s-t maximum flows) or "exhaustive"
            (edge subsets by increasing size, early exit)

    Returns:
        e(G)
    """
    ensure_valid(g)
    if g.vertex_count < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    require_connected(g)

    if method == "maxflow":
        value = _maxflow_connectivity(g)
    elif method == "exhaustive":
        value = _exhaustive_connectivity(g)
    else:
        raise ValidationError(f"unknown edge connectivity method '{method}', expected one of {METHODS}")

    logger.debug(f"Edge connectivity ({method}) = {value}")
    return value


def _maxflow_connectivity(g: DiscreteGraph) -> int:
    """A global minimum cut separates the first vertex from some other vertex."""
    flow_graph = nx.DiGraph()
    flow_graph.add_nodes_from(g.vertices)
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if flow_graph.has_edge(a, b):
                flow_graph[a][b]["capacity"] += 1
            else:
                flow_graph.add_edge(a, b, capacity=1)

    source = g.vertices[0]
    return min(
        int(nx.maximum_flow_value(flow_graph, source, sink))
        for sink in g.vertices[1:]
    )


def _exhaustive_connectivity(g: DiscreteGraph) -> int:
    index = {v: i for i, v in enumerate(g.vertices)}
    pairs = [(index[u], index[v]) for u, v in g.edges]
    upper = min(g.degrees().values())

    for size in range(1, upper + 1):
        for removed in combinations(range(len(pairs)), size):
            kept = [p for i, p in enumerate(pairs) if i not in removed]
            if not _spans(g.vertex_count, kept):
                return size
    return upper


def _spans(n: int, pairs: Sequence[Tuple[int, int]]) -> bool:
    """Union-find check that the edge list connects all n vertices."""
    parent: List[int] = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups = n
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            groups -= 1
    return groups == 1
