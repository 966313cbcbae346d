"""Combinatorial Laplacian and its Fiedler value."""
from typing import List

import numpy as np

from .linalg import SymmetricMatrix, symmetric_eigenvalues
from config.settings import get_settings
from graphs.models import DiscreteGraph
from graphs.topology import require_connected
from graphs.validation import ensure_valid
from utils.exceptions import GraphError
from utils.logger import get_logger

logger = get_logger()


def laplacian_matrix(g: DiscreteGraph) -> SymmetricMatrix:
    """L = D - A; parallel edges add to both adjacency and degree."""
    ensure_valid(g)
    index = {v: i for i, v in enumerate(g.vertices)}
    n = g.vertex_count
    lap = np.zeros((n, n))
    for u, v in g.edges:
        i, j = index[u], index[v]
        lap[i, i] += 1.0
        lap[j, j] += 1.0
        lap[i, j] -= 1.0
        lap[j, i] -= 1.0
    return SymmetricMatrix(lap)


def laplacian_spectrum(g: DiscreteGraph, method: str = "auto") -> List[float]:
    return symmetric_eigenvalues(laplacian_matrix(g), method=method)


def zero_eigenvalue_multiplicity(g: DiscreteGraph) -> int:
    """Eigenvalues below the zero tolerance; equals the number of components."""
    tolerance = get_settings().zero_tolerance
    return sum(1 for value in laplacian_spectrum(g) if value < tolerance)


def fiedler_value(g: DiscreteGraph, method: str = "auto") -> float:
    """Second-smallest eigenvalue of L for a connected graph.

    The zero mode is identified by its index, not by magnitude.
    """
    ensure_valid(g)
    if g.vertex_count < 2:
        raise GraphError("Fiedler value needs at least two vertices")
    require_connected(g)

    value = laplacian_spectrum(g, method=method)[1]
    logger.debug(f"Fiedler value = {value:.12g}")
    return value
