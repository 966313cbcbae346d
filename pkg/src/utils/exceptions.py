"""Custom exception classes for cheeger."""
from typing import List


class CheegerError(Exception):
    """Base exception for cheeger."""
    pass


class ConfigError(CheegerError):
    """Configuration-related errors."""
    pass


class InputError(CheegerError):
    """Unreadable, malformed or schema-violating input files."""
    pass


class ValidationError(CheegerError):
    """Invalid family, ensemble or command parameters."""
    pass


class GraphError(CheegerError):
    """Graph does not meet an operation's precondition."""
    pass


class GraphValidationError(GraphError):
    """Graph violates a data-model invariant."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DisconnectedGraphError(GraphError):
    """Operation requires a connected graph."""

    def __init__(self, component_count: int):
        self.component_count = component_count
        super().__init__(f"graph is disconnected ({component_count} components)")


class GuardExceededError(CheegerError):
    """Enumeration or problem size beyond the configured guard."""
    pass


class SolverError(CheegerError):
    """Eigenvalue kernel failed to converge."""
    pass


class IneffectiveCutError(CheegerError):
    """A cut point separates two fragments of the same color."""
    pass


class EnsembleError(CheegerError):
    """Random ensemble could not produce an admissible graph."""
    pass
