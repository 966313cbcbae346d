"""Checks of the discrete spectral estimates.

fiedler:      2 e(G) (1 - cos(pi / V)) <= lambda_1(G) <= e(G)
alon_milman:  h(G)^2 / (2 deg_max) <= lambda_1(G) <= 2 h(G)
"""
import math

from .cheeger import discrete_cheeger
from .laplacian import fiedler_value
from config.settings import get_settings
from graphs.connectivity import edge_connectivity
from graphs.models import DiscreteGraph
from reports.models import BoundReport, graph_digest
from utils.logger import get_logger

logger = get_logger()


def _is_complete(g: DiscreteGraph) -> bool:
    """Underlying simple graph is complete."""
    pairs = {frozenset(edge) for edge in g.edges}
    n = g.vertex_count
    return len(pairs) == n * (n - 1) // 2


def check_fiedler_bounds(g: DiscreteGraph) -> BoundReport:
    """Edge-connectivity sandwich of the Fiedler value.

    The upper estimate is Fiedler's bound for non-complete simple graphs; it
    is reported not-applicable on complete graphs (K_n has lambda_1 = n > n - 1)
    and on multigraphs (doubling an edge raises lambda_1 past e(G)). The whole
    report is not-applicable for V = 2.
    """
    tolerance = get_settings().discrete_tolerance
    n = g.vertex_count
    connectivity = edge_connectivity(g)
    lam = fiedler_value(g)

    lower = 2.0 * connectivity * (1.0 - math.cos(math.pi / n))
    upper = float(connectivity)

    note = ""
    lower_applicable = upper_applicable = True
    if n == 2:
        lower_applicable = upper_applicable = False
        note = "V = 2: estimate stated for nontrivial graphs"
    elif _is_complete(g):
        upper_applicable = False
        note = "complete graph: upper estimate applies to non-complete graphs only"
    elif g.has_parallel_edges:
        upper_applicable = False
        note = "parallel edges: upper estimate applies to simple graphs only"

    report = BoundReport.evaluate(
        "fiedler",
        middle=lam,
        lhs=lower,
        rhs=upper,
        tolerance=tolerance,
        lower_applicable=lower_applicable,
        upper_applicable=upper_applicable,
        quantities={"lambda1": lam, "edge_connectivity": connectivity, "V": n},
        digest=graph_digest(g),
        note=note,
    )
    logger.debug(f"fiedler: {lower:.6g} <= {lam:.6g} <= {upper:.6g} -> {report.status.value}")
    return report


def check_alon_milman(g: DiscreteGraph) -> BoundReport:
    """Cheeger sandwich h^2 / (2 deg_max) <= lambda_1 <= 2h."""
    tolerance = get_settings().discrete_tolerance
    cheeger = discrete_cheeger(g)
    h = float(cheeger.value)
    deg_max = g.max_degree()
    lam = fiedler_value(g)

    lower = h * h / (2.0 * deg_max)
    upper = 2.0 * h

    report = BoundReport.evaluate(
        "alon_milman",
        middle=lam,
        lhs=lower,
        rhs=upper,
        tolerance=tolerance,
        quantities={"lambda1": lam, "h": h, "deg_max": deg_max},
        digest=graph_digest(g),
    )
    logger.debug(f"alon_milman: {lower:.6g} <= {lam:.6g} <= {upper:.6g} -> {report.status.value}")
    return report
