"""Graph file ingestion (JSON, UTF-8).

Format::

    {"vertices": ["a", "b"], "edges": [{"id": "e1", "u": "a", "v": "b", "length": 1.0}]}

Edge ids are optional ("e<index>" when absent). Lengths are ignored on the
discrete side and required on the metric side.
"""
import json
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .models import DiscreteGraph, MetricEdge, MetricGraph
from .validation import validate
from utils.exceptions import InputError
from utils.logger import get_logger

logger = get_logger()


class EdgeSchema(BaseModel):
    """Pydantic schema for one edge record."""
    model_config = ConfigDict(extra="forbid")

    id: Optional[str] = Field(default=None, description="Edge identifier")
    u: str = Field(description="First endpoint")
    v: str = Field(description="Second endpoint")
    length: Optional[float] = Field(default=None, description="Edge length (metric side)")


class GraphSchema(BaseModel):
    """Pydantic schema for a graph file."""
    model_config = ConfigDict(extra="forbid")

    vertices: List[str]
    edges: List[EdgeSchema]


def parse_graph_file(path: Union[str, Path], kind: str = "metric") -> Union[MetricGraph, DiscreteGraph]:
    """Read and validate a graph file.

    Args:
        path: JSON file
        kind: "metric" or "discrete"

    Raises:
        InputError: IO, syntax or schema problems, with a position in the message
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: cannot read graph file: {e}")

    return parse_graph_text(text, kind=kind, source=str(path), name=path.stem)


def parse_graph_text(
    text: str,
    kind: str = "metric",
    source: str = "<string>",
    name: str = ""
) -> Union[MetricGraph, DiscreteGraph]:
    """Parse graph JSON text; see parse_graph_file."""
    if kind not in ("metric", "discrete"):
        raise InputError(f"unknown graph kind '{kind}'")

    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}")

    try:
        schema = GraphSchema.model_validate(payload)
    except ValidationError as e:
        raise InputError(f"{source}: {_describe_schema_errors(e)}")

    duplicates = sorted({v for v in schema.vertices if schema.vertices.count(v) > 1})
    if duplicates:
        raise InputError(f"{source}: vertices: duplicate vertex id(s) {duplicates}")

    graph = _build_graph(schema, kind, source, name)

    report = validate(graph)
    if not report.is_valid:
        raise InputError(f"{source}: " + "; ".join(report.violations))

    logger.debug(f"Loaded {kind} graph from {source}: {len(schema.vertices)} vertices, {len(schema.edges)} edges")
    return graph


def _build_graph(schema: GraphSchema, kind: str, source: str, name: str) -> Union[MetricGraph, DiscreteGraph]:
    if kind == "discrete":
        return DiscreteGraph(schema.vertices, [(e.u, e.v) for e in schema.edges], name)

    edges = []
    for index, record in enumerate(schema.edges):
        edge_id = record.id if record.id is not None else f"e{index}"
        length = record.length
        if length is None:
            raise InputError(f"{source}: edges[{index}] (edge '{edge_id}'): length required on the metric side")
        if not length > 0:
            raise InputError(f"{source}: edges[{index}] (edge '{edge_id}'): length must be positive, got {length}")
        edges.append(MetricEdge(edge_id, record.u, record.v, length))
    return MetricGraph(schema.vertices, edges, name)


def _describe_schema_errors(error: ValidationError) -> str:
    """Render pydantic errors with JSON-path style positions."""
    messages = []
    for item in error.errors():
        location = ""
        for part in item["loc"]:
            location += f"[{part}]" if isinstance(part, int) else (f".{part}" if location else str(part))
        messages.append(f"{location or '<root>'}: {item['msg']}")
    return "; ".join(messages)


def write_graph_file(g: Union[MetricGraph, DiscreteGraph], path: Union[str, Path]) -> None:
    """Write a graph in the ingestion format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(g.to_dict(), f, ensure_ascii=False, indent=2)
        f.write("\n")
