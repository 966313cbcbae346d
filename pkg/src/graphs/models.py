"""Data models for discrete and metric graphs."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class DiscreteGraph:
    """Combinatorial multigraph: ordered vertices, unordered vertex pairs as edges."""
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> Dict[str, int]:
        """Vertex degrees; parallel edges count with multiplicity."""
        degrees = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        return degrees

    def max_degree(self) -> int:
        return max(self.degrees().values(), default=0)

    @property
    def has_parallel_edges(self) -> bool:
        return len({frozenset(edge) for edge in self.edges}) < len(self.edges)

    def relabeled(self, mapping: Dict[str, str]) -> "DiscreteGraph":
        """Rename vertices; vertex order follows the new identifiers."""
        vertices = sorted(mapping[v] for v in self.vertices)
        edges = [(mapping[u], mapping[v]) for u, v in self.edges]
        return DiscreteGraph(vertices, edges, self.name)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": f"e{i}", "u": u, "v": v} for i, (u, v) in enumerate(self.edges)],
        }


@dataclass(frozen=True)
class MetricEdge:
    """Edge identified with the interval (0, length), oriented from u to v."""
    id: str
    u: str
    v: str
    length: float

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class MetricGraph:
    """Multigraph with positive edge lengths; loops and parallel edges allowed."""
    vertices: Tuple[str, ...]
    edges: Tuple[MetricEdge, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def lengths(self) -> List[float]:
        return [e.length for e in self.edges]

    def edge(self, edge_id: str) -> MetricEdge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def degrees(self) -> Dict[str, int]:
        """Vertex degrees; a loop contributes 2."""
        degrees = {v: 0 for v in self.vertices}
        for e in self.edges:
            degrees[e.u] = degrees.get(e.u, 0) + 1
            degrees[e.v] = degrees.get(e.v, 0) + 1
        return degrees

    def has_loop(self) -> bool:
        return any(e.is_loop for e in self.edges)

    def discrete_shadow(self) -> DiscreteGraph:
        """Underlying combinatorial graph; lengths and loops are dropped."""
        edges = [(e.u, e.v) for e in self.edges if not e.is_loop]
        return DiscreteGraph(self.vertices, edges, self.name)

    def with_name(self, name: str) -> "MetricGraph":
        return MetricGraph(self.vertices, self.edges, name)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "u": e.u, "v": e.v, "length": e.length} for e in self.edges],
        }


@dataclass(frozen=True)
class SmoothingResult:
    """Metric graph with all suppressible degree-2 vertices removed."""
    reduced: MetricGraph
    essential_edge_count: int
    vertex_map: Dict[str, str] = field(default_factory=dict)  # removed vertex -> merged edge id

    @property
    def has_loop(self) -> bool:
        return self.reduced.has_loop()


@dataclass(frozen=True)
class ValidationReport:
    """Invariant violations of a graph; empty when admissible."""
    violations: Tuple[str, ...] = ()
    kind: Optional[str] = None

    @property
    def is_valid(self) -> bool:
        return not self.violations
