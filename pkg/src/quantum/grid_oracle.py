"""Brute-force reference for the metric Cheeger constant on small graphs.

Cut points are restricted to the grid {j * l_e / n : 0 <= j <= n} of every
edge. Pieces are formed by an explicit fragment graph, every coloring of
the pieces is tried, and the balancing over grid positions is searched by
meet-in-the-middle over edge halves. The result upper-bounds h(Gamma) and
equals it whenever the grid contains an optimal witness.
"""
import bisect
import itertools
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .cuts import PreparedGraph
from config.settings import get_settings
from graphs.models import MetricGraph
from graphs.topology import require_connected
from graphs.validation import ensure_valid
from utils.exceptions import GuardExceededError, ValidationError
from utils.logger import get_logger

logger = get_logger()

MAX_CUTS = 2


def metric_cheeger_grid_oracle(g: MetricGraph, grid_n: int) -> float:
    """Smallest ratio over cut configurations with cuts on the grid of step l_e / grid_n."""
    return float(grid_cheeger_exact(g, grid_n))


def grid_cheeger_exact(g: MetricGraph, grid_n: int) -> Fraction:
    ensure_valid(g)
    require_connected(g)
    settings = get_settings()
    if g.edge_count > settings.grid_max_edges:
        raise GuardExceededError(
            f"grid oracle limited to {settings.grid_max_edges} edges, got {g.edge_count}"
        )
    if not 1 <= grid_n <= settings.grid_max_n:
        raise ValidationError(f"grid_n must be in [1, {settings.grid_max_n}], got {grid_n}")

    prepared = PreparedGraph(g)
    # grid measures are integers in units of 1 / (grid_n * scale)
    total = prepared.total_units * grid_n
    best: Optional[Fraction] = None

    patterns = sorted(
        (p for p in itertools.product(range(MAX_CUTS + 1), repeat=g.edge_count) if any(p)),
        key=lambda p: (sum(p), p),
    )
    for pattern in patterns:
        k = sum(pattern)
        if best is not None and Fraction(2 * k * grid_n * prepared.scale, total) > best:
            break
        pieces, owner = _pieces(prepared, pattern)
        for colors in _effective_colorings(len(pieces), _separated_pairs(pattern, owner)):
            d = _best_denominator(prepared, pattern, owner, colors, grid_n, total)
            if d <= 0:
                continue
            ratio = Fraction(k * grid_n * prepared.scale, d)
            if best is None or ratio < best:
                best = ratio

    if best is None:
        raise ValidationError("no feasible grid configuration")
    logger.debug(f"Grid oracle (n={grid_n}) h <= {best}")
    return best


def _pieces(prepared: PreparedGraph, pattern: Sequence[int]):
    """Connected pieces of the cut graph and the piece owning each graph node."""
    cut_graph = nx.Graph()
    cut_graph.add_nodes_from(("v", i) for i in range(len(prepared.vertex_index)))
    for index, ((a, b), cuts) in enumerate(zip(prepared.ends, pattern)):
        if cuts == 0:
            cut_graph.add_edge(("v", a), ("v", b))
            continue
        cut_graph.add_nodes_from(("f", index, p) for p in range(cuts + 1))
        cut_graph.add_edge(("f", index, 0), ("v", a))
        cut_graph.add_edge(("f", index, cuts), ("v", b))

    pieces = sorted((sorted(c) for c in nx.connected_components(cut_graph)))
    owner = {node: i for i, piece in enumerate(pieces) for node in piece}
    return pieces, owner


def _separated_pairs(pattern: Sequence[int], owner) -> List[Tuple[int, int]]:
    return [
        (owner[("f", index, p)], owner[("f", index, p + 1)])
        for index, cuts in enumerate(pattern)
        for p in range(cuts)
    ]


def _effective_colorings(count: int, pairs: List[Tuple[int, int]]) -> Iterator[Tuple[int, ...]]:
    """All 0/1 colorings of `count` pieces with different colors across every cut."""
    by_last: List[List[Tuple[int, int]]] = [[] for _ in range(count)]
    for a, b in pairs:
        by_last[max(a, b)].append((a, b))

    colors = [0] * count

    def extend(i: int) -> Iterator[Tuple[int, ...]]:
        if i == count:
            yield tuple(colors)
            return
        for c in (0, 1):
            colors[i] = c
            if all(colors[a] != colors[b] for a, b in by_last[i]):
                yield from extend(i + 1)

    yield from extend(0)


def _edge_contributions(units: int, cuts: int, start_color: int, grid_n: int) -> Set[int]:
    """Measures of S on one cut edge over all grid placements of its cuts."""
    values: Set[int] = set()
    for ticks in itertools.combinations_with_replacement(range(grid_n + 1), cuts):
        bounds = (0,) + ticks + (grid_n,)
        in_s = sum(
            bounds[p + 1] - bounds[p]
            for p in range(cuts + 1)
            if start_color ^ (p % 2) == 0
        )
        values.add(in_s * units)
    return values


def _sumset(options: List[Set[int]]) -> List[int]:
    sums = {0}
    for values in options:
        sums = {s + v for s in sums for v in values}
    return sorted(sums)


def _best_denominator(prepared, pattern, owner, colors, grid_n: int, total: int) -> int:
    fixed = sum(
        units * grid_n
        for units, (a, _), cuts in zip(prepared.units, prepared.ends, pattern)
        if cuts == 0 and colors[owner[("v", a)]] == 0
    )
    options = [
        _edge_contributions(units, cuts, colors[owner[("f", index, 0)]], grid_n)
        for index, (units, cuts) in enumerate(zip(prepared.units, pattern))
        if cuts
    ]
    half = len(options) // 2
    left, right = _sumset(options[:half]), _sumset(options[half:])

    best = 0
    for a in left:
        # doubled target keeps L/2 integral
        want = total - 2 * (fixed + a)
        i = bisect.bisect_left(right, want // 2)
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(right):
                s = fixed + a + right[j]
                best = max(best, min(s, total - s))
    return best
