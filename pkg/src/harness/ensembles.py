"""Seeded random graph ensembles for verification campaigns."""
from dataclasses import dataclass, field
from typing import List, Tuple, Union

import networkx as nx
import numpy as np

from .families import FamilySpec, generate_family, numbered_ids
from config.settings import get_settings
from graphs.models import DiscreteGraph, MetricEdge, MetricGraph
from utils.exceptions import EnsembleError
from utils.logger import get_logger

logger = get_logger()

METRIC_POOL = ("cycle", "star", "flower", "dumbbell", "multigraph")


@dataclass(frozen=True)
class DiscreteEnsemble:
    """G(V, p) conditioned on connectivity."""
    vertices: int
    p: float
    seed: int


@dataclass(frozen=True)
class MetricEnsemble:
    """Topology drawn from a pool, lengths uniform in a range."""
    seed: int
    pool: Tuple[str, ...] = METRIC_POOL
    length_range: Tuple[float, float] = (0.2, 2.0)
    max_edges: int = 6


def generate_random(ensemble: Union[DiscreteEnsemble, MetricEnsemble]):
    """One reproducible connected graph from the ensemble."""
    if isinstance(ensemble, DiscreteEnsemble):
        return _random_discrete(ensemble)
    if isinstance(ensemble, MetricEnsemble):
        return _random_metric(ensemble)
    raise EnsembleError(f"Unknown ensemble {type(ensemble).__name__}")


def _random_discrete(ensemble: DiscreteEnsemble) -> DiscreteGraph:
    n, p = ensemble.vertices, ensemble.p
    if n < 1:
        raise EnsembleError(f"need at least one vertex, got {n}")
    if not 0.0 <= p <= 1.0:
        raise EnsembleError(f"edge probability must lie in [0, 1], got {p}")
    if n > 1 and p <= 0.0:
        raise EnsembleError(f"cannot produce a connected graph on {n} vertices with p = {p}")

    retry_cap = get_settings().retry_cap
    rng = np.random.default_rng(ensemble.seed)
    names = numbered_ids("v", n)
    for attempt in range(retry_cap):
        sample = nx.gnp_random_graph(n, p, seed=int(rng.integers(2 ** 32)))
        if nx.is_connected(sample):
            edges = [(names[a], names[b]) for a, b in sorted(sample.edges())]
            logger.debug(f"G({n}, {p:.3f}) connected after {attempt + 1} draws")
            return DiscreteGraph(names, edges, f"gnp-{n}-{ensemble.seed}")

    raise EnsembleError(f"no connected G({n}, {p}) within {retry_cap} draws")


def _random_metric(ensemble: MetricEnsemble) -> MetricGraph:
    low, high = ensemble.length_range
    if not 0.0 < low <= high:
        raise EnsembleError(f"invalid length range {ensemble.length_range}")
    if ensemble.max_edges < 1:
        raise EnsembleError("max_edges must be at least 1")
    unknown = set(ensemble.pool) - set(METRIC_POOL)
    if unknown or not ensemble.pool:
        raise EnsembleError(f"invalid topology pool {ensemble.pool}")

    rng = np.random.default_rng(ensemble.seed)
    cap = ensemble.max_edges
    kind = ensemble.pool[int(rng.integers(len(ensemble.pool)))]

    if kind == "multigraph":
        topology = _random_multigraph(rng, cap)
    elif kind == "dumbbell":
        m = int(rng.integers(1, max(1, (cap - 1) // 2) + 1))
        topology = generate_family(FamilySpec("dumbbell", m, length=2.0, handle=0.5))
    else:
        topology = generate_family(FamilySpec(kind, int(rng.integers(1, cap + 1))))

    lengths = rng.uniform(low, high, size=topology.edge_count)
    edges = [MetricEdge(e.id, e.u, e.v, float(ell)) for e, ell in zip(topology.edges, lengths)]
    return MetricGraph(topology.vertices, edges, f"{kind}-{ensemble.seed}")


def _random_multigraph(rng: np.random.Generator, max_edges: int) -> MetricGraph:
    """Random spanning tree plus extra edges; parallel edges and loops allowed."""
    n = int(rng.integers(2, min(5, max_edges + 1) + 1))
    names = numbered_ids("v", n)
    pairs = [(names[int(rng.integers(i))], names[i]) for i in range(1, n)]
    extra = int(rng.integers(0, max_edges - len(pairs) + 1))
    for _ in range(extra):
        a, b = (int(x) for x in rng.integers(n, size=2))
        pairs.append((names[min(a, b)], names[max(a, b)]))
    edges = [MetricEdge(i, u, v, 1.0) for i, (u, v) in zip(numbered_ids("e", len(pairs)), pairs)]
    return MetricGraph(names, edges, "multigraph")


@dataclass
class EnsembleMember:
    index: int
    graph: Union[DiscreteGraph, MetricGraph]
    parameters: dict = field(default_factory=dict)


def discrete_ensemble(count: int, seed: int) -> List[EnsembleMember]:
    """count connected G(V, p) graphs; member i depends only on (seed, i)."""
    settings = get_settings()
    p_low, p_high = settings.discrete_p_range
    members = []
    for index in range(count):
        rng = np.random.default_rng([seed, index])
        n = int(rng.integers(settings.discrete_min_vertices, settings.discrete_max_vertices + 1))
        p = float(rng.uniform(p_low, p_high))
        sub_seed = int(rng.integers(2 ** 31))
        g = generate_random(DiscreteEnsemble(n, p, sub_seed))
        g = DiscreteGraph(g.vertices, g.edges, f"discrete-{seed}-{index:03d}")
        members.append(EnsembleMember(index, g, {"V": n, "p": p, "seed": sub_seed}))
    logger.info(f"Generated {count} discrete graphs from seed {seed}")
    return members


def metric_ensemble(count: int, seed: int) -> List[EnsembleMember]:
    """count metric graphs; member i depends only on (seed, i)."""
    settings = get_settings()
    members = []
    for index in range(count):
        sub_seed = int(np.random.default_rng([seed, index]).integers(2 ** 31))
        ensemble = MetricEnsemble(
            seed=sub_seed,
            length_range=tuple(settings.metric_length_range),
            max_edges=settings.ensemble_max_edges,
        )
        g = generate_random(ensemble)
        members.append(EnsembleMember(index, g.with_name(f"metric-{seed}-{index:03d}"), {"seed": sub_seed}))
    logger.info(f"Generated {count} metric graphs from seed {seed}")
    return members
