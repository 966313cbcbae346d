"""Graph data model, validation, topology and file ingestion."""
from .models import DiscreteGraph, MetricEdge, MetricGraph, SmoothingResult, ValidationReport
from .validation import validate, ensure_valid
from .topology import (
    is_connected,
    component_count,
    smooth_degree_two,
    total_length,
    subdivide_edge,
    scale_lengths,
    to_networkx
)
from .connectivity import edge_connectivity
from .loader import parse_graph_file, parse_graph_text, write_graph_file

__all__ = [
    "DiscreteGraph",
    "MetricEdge",
    "MetricGraph",
    "SmoothingResult",
    "ValidationReport",
    "validate",
    "ensure_valid",
    "is_connected",
    "component_count",
    "smooth_degree_two",
    "total_length",
    "subdivide_edge",
    "scale_lengths",
    "to_networkx",
    "edge_connectivity",
    "parse_graph_file",
    "parse_graph_text",
    "write_graph_file"
]
