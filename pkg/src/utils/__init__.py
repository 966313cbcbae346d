"""Utility modules."""
from .logger import get_logger, configure_logging, set_graph_context
from .exceptions import (
    CheegerError,
    ConfigError,
    InputError,
    ValidationError,
    GraphError,
    GraphValidationError,
    DisconnectedGraphError,
    GuardExceededError,
    SolverError,
    IneffectiveCutError,
    EnsembleError
)
from .digest import payload_digest, file_digest

__all__ = [
    "get_logger",
    "configure_logging",
    "set_graph_context",
    "CheegerError",
    "ConfigError",
    "InputError",
    "ValidationError",
    "GraphError",
    "GraphValidationError",
    "DisconnectedGraphError",
    "GuardExceededError",
    "SolverError",
    "IneffectiveCutError",
    "EnsembleError",
    "payload_digest",
    "file_digest"
]
