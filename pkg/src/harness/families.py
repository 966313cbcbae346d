"""Named metric graph families."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from graphs.models import MetricEdge, MetricGraph
from graphs.validation import ensure_valid
from utils.exceptions import ValidationError
from utils.logger import get_logger

logger = get_logger()

FAMILY_KINDS = ("path", "cycle", "star", "flower", "pumpkin", "dumbbell", "butterfly", "complete", "interval")

# CLI parameter names accepted per field
PARAM_ALIASES = {
    "n": "count",
    "E": "count",
    "m": "count",
    "count": "count",
    "L": "length",
    "length": "length",
    "eps": "handle",
    "handle": "handle",
    "l": "edge_length",
    "edge_length": "edge_length",
}


@dataclass(frozen=True)
class FamilySpec:
    """
    Parameters of a named family.

    count is the number of edges (path, cycle, star, flower, pumpkin), petals
    per side (dumbbell) or vertices (complete). length is the total length;
    edge_length fixes each edge instead. Without either, edges have length 1,
    except the dumbbell which defaults to total length 2.
    """
    kind: str
    count: int = 1
    length: Optional[float] = None
    handle: Optional[float] = None
    edge_length: Optional[float] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValidationError(f"Unknown family '{self.kind}' (known: {', '.join(FAMILY_KINDS)})")
        if self.count < 1:
            raise ValidationError(f"{self.kind}: count must be at least 1, got {self.count}")
        if self.kind == "complete" and self.count < 2:
            raise ValidationError("complete: needs at least 2 vertices")
        for name in ("length", "handle", "edge_length"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValidationError(f"{self.kind}: {name} must be positive, got {value}")
        if self.length is not None and self.edge_length is not None:
            raise ValidationError(f"{self.kind}: give either length or edge_length, not both")
        if self.kind == "dumbbell":
            if self.handle is None:
                raise ValidationError("dumbbell: handle length required")
            if self.edge_length is not None:
                raise ValidationError("dumbbell: petal length follows from length and handle")
            if self.handle >= self.total_length:
                raise ValidationError(
                    f"dumbbell: handle {self.handle} must be shorter than the total length {self.total_length}"
                )
        elif self.handle is not None:
            raise ValidationError(f"{self.kind}: handle applies to dumbbells only")

    @classmethod
    def from_params(cls, kind: str, params: Dict[str, str]) -> "FamilySpec":
        """Build from string key=value pairs as given on the command line."""
        values = {}
        for key, raw in params.items():
            field_name = PARAM_ALIASES.get(key)
            if field_name is None:
                raise ValidationError(f"Unknown family parameter '{key}'")
            try:
                values[field_name] = int(raw) if field_name == "count" else float(raw)
            except ValueError:
                raise ValidationError(f"Parameter {key}: cannot parse '{raw}'")
        return cls(kind, **values)

    @property
    def total_length(self) -> float:
        if self.length is not None:
            return self.length
        return 2.0 if self.kind == "dumbbell" else float(self.edge_count) * (self.edge_length or 1.0)

    @property
    def edge_count(self) -> int:
        if self.kind == "dumbbell":
            return 2 * self.count + 1
        if self.kind == "butterfly":
            return 6
        if self.kind == "complete":
            return self.count * (self.count - 1) // 2
        if self.kind == "interval":
            return 1
        return self.count

    def label(self) -> str:
        parts = [f"count={self.count}"]
        for name in ("length", "handle", "edge_length"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value:g}")
        return f"{self.kind}({', '.join(parts)})"


def numbered_ids(prefix: str, n: int) -> List[str]:
    width = len(str(max(n - 1, 0)))
    return [f"{prefix}{i:0{width}d}" for i in range(n)]


def _edge_length(spec: FamilySpec) -> float:
    if spec.edge_length is not None:
        return spec.edge_length
    if spec.length is not None:
        return spec.length / spec.edge_count
    return 1.0


def _build(vertices: List[str], pairs: List[Tuple[str, str]], lengths: List[float], name: str) -> MetricGraph:
    edge_ids = numbered_ids("e", len(pairs))
    edges = [MetricEdge(i, u, v, ell) for i, (u, v), ell in zip(edge_ids, pairs, lengths)]
    return MetricGraph(vertices, edges, name)


def generate_family(spec: FamilySpec) -> MetricGraph:
    """Deterministic construction; vertex and edge ids are stable across runs."""
    kind, n = spec.kind, spec.count
    ell = _edge_length(spec)

    if kind in ("path", "interval"):
        edges = 1 if kind == "interval" else n
        v = numbered_ids("v", edges + 1)
        pairs = [(v[i], v[i + 1]) for i in range(edges)]
    elif kind == "cycle":
        v = numbered_ids("v", n)
        pairs = [(v[i], v[(i + 1) % n]) for i in range(n)]
    elif kind == "star":
        v = numbered_ids("v", n + 1)
        pairs = [(v[0], v[i]) for i in range(1, n + 1)]
    elif kind == "flower":
        v = numbered_ids("v", 1)
        pairs = [(v[0], v[0])] * n
    elif kind == "pumpkin":
        v = numbered_ids("v", 2)
        pairs = [(v[0], v[1])] * n
    elif kind == "butterfly":
        v = numbered_ids("v", 5)
        pairs = [(v[0], v[1]), (v[1], v[2]), (v[2], v[0]), (v[0], v[3]), (v[3], v[4]), (v[4], v[0])]
    elif kind == "complete":
        v = numbered_ids("v", n)
        pairs = [(v[i], v[j]) for i in range(n) for j in range(i + 1, n)]
    else:
        return _dumbbell(spec)

    g = _build(v, pairs, [ell] * len(pairs), spec.label())
    ensure_valid(g)
    logger.debug(f"Generated {spec.label()}: {g.vertex_count} vertices, {g.edge_count} edges")
    return g


def _dumbbell(spec: FamilySpec) -> MetricGraph:
    """Two flowers of m petals joined by a handle; petals (L - eps) / (2m)."""
    m, total, eps = spec.count, spec.total_length, spec.handle
    petal = (total - eps) / (2 * m)
    # handle absorbs rounding so the lengths add up to L exactly
    handle = float(Fraction(total) - 2 * m * Fraction(petal))
    if not handle > 0:
        raise ValidationError(f"dumbbell: handle {eps} too short to represent next to petals of {petal}")

    v = numbered_ids("v", 2)
    pairs = [(v[0], v[0])] * m + [(v[0], v[1])] + [(v[1], v[1])] * m
    lengths = [petal] * m + [handle] + [petal] * m
    g = _build(v, pairs, lengths, spec.label())
    ensure_valid(g)
    return g
