"""Cut configurations on metric graphs and their optimal balancing.

A cut configuration places c_e cut points on edge e and colors every piece of
the cut graph as inside S or inside its complement. Pieces touching a vertex
merge with everything reachable through uncut edges; the c_e - 1 inner pieces
of an edge float freely. Which pieces form a component does not depend on
where the cuts sit, only the measure split does: every cut edge can hand any
amount in [0, l_e] to S, so |S| ranges over an interval.

All measure arithmetic is exact. Binary64 lengths are dyadic rationals, so
they are rescaled to integers over a common power-of-two denominator.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from graphs.models import MetricGraph
from utils.exceptions import IneffectiveCutError, ValidationError


class Side(str, Enum):
    """Color of a piece of the cut graph."""
    IN_S = "S"
    IN_COMPLEMENT = "S^c"

    @property
    def code(self) -> int:
        return 0 if self is Side.IN_S else 1

    @classmethod
    def from_code(cls, code: int) -> "Side":
        return cls.IN_S if code == 0 else cls.IN_COMPLEMENT


@dataclass(frozen=True)
class CutConfiguration:
    """Cut multiplicity per edge (edge-list order) and one color per component."""
    cuts_per_edge: Tuple[int, ...]
    coloring: Tuple[Side, ...]

    def __post_init__(self):
        object.__setattr__(self, "cuts_per_edge", tuple(self.cuts_per_edge))
        object.__setattr__(self, "coloring", tuple(Side(c) for c in self.coloring))

    @property
    def k(self) -> int:
        return sum(self.cuts_per_edge)

    def encoding(self) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
        """Sort key used for deterministic tie-breaks."""
        return self.k, self.cuts_per_edge, tuple(side.code for side in self.coloring)


@dataclass(frozen=True)
class Fragment:
    """Piece number `position` (0 at u, c_e at v) of a cut edge."""
    edge_index: int
    edge_id: str
    position: int
    max_length: float


@dataclass(frozen=True)
class CutComponent:
    """Connected piece of the cut graph."""
    index: int
    vertices: Tuple[str, ...]
    fixed_measure: float
    fragments: Tuple[Fragment, ...]

    @property
    def is_floating(self) -> bool:
        return not self.vertices

    def describe(self) -> dict:
        if self.is_floating:
            fragment = self.fragments[0]
            return {"edge": fragment.edge_id, "fragment": fragment.position}
        return {"vertices": list(self.vertices)}


@dataclass(frozen=True)
class ComponentStructure:
    """Components of a cut graph; vertex classes first, floating pieces after."""
    components: Tuple[CutComponent, ...]
    vertex_component: Dict[str, int]
    fragment_component: Dict[Tuple[int, int], int]

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ConfigurationEvaluation:
    """Optimal balancing of one configuration."""
    configuration: CutConfiguration
    s_min: float
    s_max: float
    s_opt: float
    denominator: float
    ratio: Optional[Fraction]

    @property
    def feasible(self) -> bool:
        return self.ratio is not None

    @property
    def value(self) -> float:
        return float(self.ratio) if self.ratio is not None else float("inf")


class PreparedGraph:
    """Metric graph with integer edge lengths over a common dyadic denominator."""

    def __init__(self, g: MetricGraph):
        self.graph = g
        self.vertex_index = {v: i for i, v in enumerate(g.vertices)}
        self.ends = [(self.vertex_index[e.u], self.vertex_index[e.v]) for e in g.edges]

        fractions = [Fraction(e.length) for e in g.edges]
        self.scale = max((f.denominator for f in fractions), default=1)
        self.units = [f.numerator * (self.scale // f.denominator) for f in fractions]
        self.total_units = sum(self.units)

    @property
    def edge_count(self) -> int:
        return len(self.units)

    def measure(self, units: int, doubled: bool = False) -> Fraction:
        return Fraction(units, 2 * self.scale if doubled else self.scale)

    def vertex_classes(self, cuts_per_edge: Sequence[int]) -> Tuple[List[int], int]:
        """Label vertices by their class under uncut edges, in first-appearance order."""
        n = len(self.vertex_index)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, b), cuts in zip(self.ends, cuts_per_edge):
            if cuts == 0:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

        labels: List[int] = []
        relabel: Dict[int, int] = {}
        for x in range(n):
            root = find(x)
            if root not in relabel:
                relabel[root] = len(relabel)
            labels.append(relabel[root])
        return labels, len(relabel)

    def propagate_coloring(self, cuts_per_edge: Sequence[int], labels: List[int], count: int) -> Optional[List[int]]:
        """Color codes per vertex class making every cut effective, class 0 in S.

        An odd number of cuts on an edge forces different colors at its two
        ends, an even number forces equal colors. Returns None when the
        constraints conflict.
        """
        neighbours: List[List[Tuple[int, int]]] = [[] for _ in range(count)]
        for (a, b), cuts in zip(self.ends, cuts_per_edge):
            if cuts:
                ca, cb = labels[a], labels[b]
                parity = cuts % 2
                if ca == cb:
                    if parity:
                        return None
                    continue
                neighbours[ca].append((cb, parity))
                neighbours[cb].append((ca, parity))

        colors: List[Optional[int]] = [None] * count
        colors[0] = 0
        stack = [0]
        while stack:
            x = stack.pop()
            for y, parity in neighbours[x]:
                wanted = colors[x] ^ parity
                if colors[y] is None:
                    colors[y] = wanted
                    stack.append(y)
                elif colors[y] != wanted:
                    return None
        if any(c is None for c in colors):
            return None
        return colors

    def balance(self, cuts_per_edge: Sequence[int], a_min: int) -> Tuple[int, int, int]:
        """Doubled-unit (s_opt, d_opt, cut_units) for |S| in [a_min, a_min + cut length].

        s_opt = clamp(L/2, A_min, A_max) and d_opt = min(s_opt, L - s_opt).
        """
        cut_units = sum(u for u, cuts in zip(self.units, cuts_per_edge) if cuts)
        s2 = min(max(self.total_units, 2 * a_min), 2 * (a_min + cut_units))
        d2 = min(s2, 2 * self.total_units - s2)
        return s2, d2, cut_units

    def ratio(self, k: int, d2: int) -> Optional[Fraction]:
        if d2 <= 0:
            return None
        return Fraction(2 * k * self.scale, d2)


def _check_multiplicities(g: MetricGraph, cuts_per_edge: Sequence[int]) -> None:
    if len(cuts_per_edge) != g.edge_count:
        raise ValidationError(
            f"cut multiplicities given for {len(cuts_per_edge)} edges, graph has {g.edge_count}"
        )
    if any(c < 0 for c in cuts_per_edge):
        raise ValidationError("cut multiplicities must be nonnegative")
    if sum(cuts_per_edge) < 1:
        raise ValidationError("a cut configuration needs at least one cut")


def components_after_cuts(g: MetricGraph, cuts_per_edge: Sequence[int]) -> ComponentStructure:
    """Split cut edges into fragments and return the connected pieces."""
    cuts_per_edge = tuple(cuts_per_edge)
    _check_multiplicities(g, cuts_per_edge)
    prepared = PreparedGraph(g)
    labels, count = prepared.vertex_classes(cuts_per_edge)

    vertices: List[List[str]] = [[] for _ in range(count)]
    for v, label in zip(g.vertices, labels):
        vertices[label].append(v)

    fixed: List[List[float]] = [[] for _ in range(count)]
    fragments: List[List[Fragment]] = [[] for _ in range(count)]
    fragment_component: Dict[Tuple[int, int], int] = {}
    floating: List[Fragment] = []

    for index, (edge, (a, b), cuts) in enumerate(zip(g.edges, prepared.ends, cuts_per_edge)):
        if cuts == 0:
            fixed[labels[a]].append(edge.length)
            continue
        for position in range(cuts + 1):
            fragment = Fragment(index, edge.id, position, edge.length)
            if position == 0:
                owner = labels[a]
            elif position == cuts:
                owner = labels[b]
            else:
                owner = count + len(floating)
                floating.append(fragment)
            if owner < count:
                fragments[owner].append(fragment)
            fragment_component[(index, position)] = owner

    components = [
        CutComponent(i, tuple(vertices[i]), sum(fixed[i]), tuple(fragments[i]))
        for i in range(count)
    ]
    components += [
        CutComponent(count + j, (), 0.0, (fragment,))
        for j, fragment in enumerate(floating)
    ]
    vertex_component = {v: labels[i] for i, v in enumerate(g.vertices)}
    return ComponentStructure(tuple(components), vertex_component, fragment_component)


def evaluate_configuration(g: MetricGraph, config: CutConfiguration) -> ConfigurationEvaluation:
    """Best ratio |dS| / min(|S|, L - |S|) over cut positions for one configuration.

    Raises:
        IneffectiveCutError: a cut point has the same color on both sides
    """
    structure = components_after_cuts(g, config.cuts_per_edge)
    if len(config.coloring) != len(structure):
        raise ValidationError(
            f"coloring has {len(config.coloring)} entries, cut graph has {len(structure)} components"
        )

    colors = [side.code for side in config.coloring]
    for index, cuts in enumerate(config.cuts_per_edge):
        for position in range(cuts):
            left = structure.fragment_component[(index, position)]
            right = structure.fragment_component[(index, position + 1)]
            if colors[left] == colors[right]:
                raise IneffectiveCutError(
                    f"cut {position + 1} on edge '{g.edges[index].id}' separates two {config.coloring[left].value} pieces"
                )

    prepared = PreparedGraph(g)
    a_min = sum(
        units
        for units, (a, _), cuts in zip(prepared.units, prepared.ends, config.cuts_per_edge)
        if cuts == 0 and colors[structure.vertex_component[g.vertices[a]]] == 0
    )
    s2, d2, cut_units = prepared.balance(config.cuts_per_edge, a_min)

    return ConfigurationEvaluation(
        configuration=config,
        s_min=float(prepared.measure(a_min)),
        s_max=float(prepared.measure(a_min + cut_units)),
        s_opt=float(prepared.measure(s2, doubled=True)),
        denominator=float(prepared.measure(d2, doubled=True)),
        ratio=prepared.ratio(config.k, d2),
    )
