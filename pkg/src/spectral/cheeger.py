"""Exact Cheeger constant h(G) of a discrete graph by subset enumeration."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from config.settings import get_settings
from graphs.models import DiscreteGraph
from graphs.topology import require_connected
from graphs.validation import ensure_valid
from utils.exceptions import GraphError, GuardExceededError
from utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class DiscreteCheegerResult:
    """h(G) = |dS| / min(|S|, |S^c|) with a minimizing vertex set S."""
    value: Fraction
    witness_set: Tuple[str, ...]
    boundary_size: int
    vertex_count: int

    @property
    def denominator(self) -> int:
        size = len(self.witness_set)
        return min(size, self.vertex_count - size)

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict:
        return {
            "h": float(self.value),
            "h_exact": f"{self.value.numerator}/{self.value.denominator}",
            "boundary": self.boundary_size,
            "S": list(self.witness_set),
        }


def discrete_cheeger(g: DiscreteGraph) -> DiscreteCheegerResult:
    """Minimize |dS| / min(|S|, |S^c|) over all vertex sets.

    Vertices are indexed in lexicographic order of their identifiers; only
    sets containing the smallest vertex are enumerated (a set and its
    complement share the ratio). Ties go to the lexicographically smallest
    set.
    """
    ensure_valid(g)
    n = g.vertex_count
    if n < 2:
        raise GraphError("Cheeger constant needs at least two vertices")
    require_connected(g)

    settings = get_settings()
    if n > settings.cheeger_max_vertices:
        raise GuardExceededError(
            f"discrete Cheeger enumeration limited to {settings.cheeger_max_vertices} vertices, got {n}"
        )

    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    ends = np.array([(index[u], index[v]) for u, v in g.edges], dtype=np.int64).reshape(-1, 2)

    best = np.inf
    candidates: List[np.ndarray] = []
    last = (1 << (n - 1)) - 1  # excludes the full vertex set

    for start in range(0, last, settings.subset_chunk):
        stop = min(start + settings.subset_chunk, last)
        masks = (np.arange(start, stop, dtype=np.int64) << 1) | 1
        ratios = _chunk_ratios(masks, ends, n)
        chunk_best = ratios.min()
        if chunk_best < best:
            best = chunk_best
            candidates = [masks[ratios == chunk_best]]
        elif chunk_best == best:
            candidates.append(masks[ratios == chunk_best])

    tied = np.concatenate(candidates)
    witness = min((_members(int(mask), n) for mask in tied))
    mask = sum(1 << i for i in witness)
    boundary = sum(((mask >> i) ^ (mask >> j)) & 1 for i, j in ends.tolist())
    size = len(witness)
    value = Fraction(boundary, min(size, n - size))

    result = DiscreteCheegerResult(value, tuple(order[i] for i in witness), boundary, n)
    logger.debug(f"Discrete Cheeger h = {value} with S = {list(result.witness_set)} ({len(tied)} tied sets)")
    return result


def _chunk_ratios(masks: np.ndarray, ends: np.ndarray, n: int) -> np.ndarray:
    sizes = np.zeros(masks.shape, dtype=np.int64)
    for i in range(n):
        sizes += (masks >> i) & 1
    boundary = np.zeros(masks.shape, dtype=np.int64)
    for i, j in ends:
        boundary += ((masks >> i) ^ (masks >> j)) & 1
    return boundary / np.minimum(sizes, n - sizes)


def _members(mask: int, n: int) -> Tuple[int, ...]:
    return tuple(i for i in range(n) if (mask >> i) & 1)
