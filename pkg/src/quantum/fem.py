"""Finite-element approximation of lambda_1 for the standard Laplacian.

Every edge carries piecewise-linear elements. Vertex values are shared
degrees of freedom, which enforces continuity; the Kirchhoff flux condition
is natural in the weak form and needs no constraint rows.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg as sla
from scipy import sparse
from scipy.sparse.linalg import eigsh

from config.settings import get_settings
from graphs.models import MetricGraph
from graphs.topology import require_connected, total_length
from graphs.validation import ensure_valid
from utils.exceptions import SolverError, ValidationError
from utils.logger import get_logger

logger = get_logger()

# shift for the sparse shift-invert path; K - sigma M stays positive definite
SHIFT = -1.0


@dataclass(frozen=True)
class Mesh:
    """Element count per edge, in edge-list order."""
    elements: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(n) for n in self.elements))
        if any(n < 2 for n in self.elements):
            raise ValidationError("every edge needs at least 2 elements")

    @classmethod
    def uniform(cls, g: MetricGraph, h0: float) -> "Mesh":
        """n_e = max(2, round(l_e / h0))."""
        if not h0 > 0:
            raise ValidationError(f"element width must be positive, got {h0}")
        return cls(tuple(max(2, int(round(e.length / h0))) for e in g.edges))

    def refined(self, factor: int = 2) -> "Mesh":
        return Mesh(tuple(n * factor for n in self.elements))

    def dof_count(self, vertex_count: int) -> int:
        return vertex_count + sum(n - 1 for n in self.elements)

    def width(self, g: MetricGraph) -> float:
        """Largest element width."""
        return max(e.length / n for e, n in zip(g.edges, self.elements))


@dataclass
class GeneralizedEigenResult:
    """lambda_1 with its refinement history."""
    lambda1: float
    mesh_sequence: List[Tuple[float, float]] = field(default_factory=list)
    extrapolated: float = 0.0
    residual: float = 0.0
    converged: bool = True
    dof_count: int = 0

    def to_dict(self) -> dict:
        return {
            "lambda1": self.lambda1,
            "extrapolated": self.extrapolated,
            "residual": self.residual,
            "converged": self.converged,
            "dof_count": self.dof_count,
            "mesh_sequence": [{"h": h, "lambda1": lam} for h, lam in self.mesh_sequence],
        }


def assemble(g: MetricGraph, mesh: Mesh) -> Tuple[sparse.csc_matrix, sparse.csc_matrix]:
    """Stiffness and mass matrices; vertex DOFs first, then interior nodes edge by edge."""
    if len(mesh.elements) != g.edge_count:
        raise ValidationError(f"mesh has {len(mesh.elements)} edges, graph has {g.edge_count}")

    vertex_dof = {v: i for i, v in enumerate(g.vertices)}
    n_dof = mesh.dof_count(g.vertex_count)

    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    k_vals: List[np.ndarray] = []
    m_vals: List[np.ndarray] = []

    next_dof = g.vertex_count
    for edge, n in zip(g.edges, mesh.elements):
        w = edge.length / n
        nodes = np.empty(n + 1, dtype=np.int64)
        nodes[0] = vertex_dof[edge.u]
        nodes[n] = vertex_dof[edge.v]
        nodes[1:n] = np.arange(next_dof, next_dof + n - 1)
        next_dof += n - 1

        i, j = nodes[:-1], nodes[1:]
        ones = np.ones(n)
        # local 2x2 blocks, flattened per element pair (ii, ij, ji, jj)
        rows += [i, i, j, j]
        cols += [i, j, i, j]
        k_vals += [ones / w, -ones / w, -ones / w, ones / w]
        m_vals += [ones * w / 3.0, ones * w / 6.0, ones * w / 6.0, ones * w / 3.0]

    r, c = np.concatenate(rows), np.concatenate(cols)
    stiffness = sparse.coo_matrix((np.concatenate(k_vals), (r, c)), shape=(n_dof, n_dof)).tocsc()
    mass = sparse.coo_matrix((np.concatenate(m_vals), (r, c)), shape=(n_dof, n_dof)).tocsc()
    return stiffness, mass


def solve_mesh(g: MetricGraph, mesh: Mesh) -> Tuple[float, float]:
    """Second-smallest eigenvalue of K u = lambda M u and its residual norm."""
    stiffness, mass = assemble(g, mesh)
    n_dof = stiffness.shape[0]
    if n_dof < 2:
        raise SolverError("discretization has fewer than two degrees of freedom")

    if n_dof <= get_settings().fem_dense_dof_limit:
        values, vectors = sla.eigh(stiffness.toarray(), mass.toarray(), subset_by_index=[0, 1])
    else:
        rng = np.random.default_rng(0)
        try:
            values, vectors = eigsh(
                stiffness, k=2, M=mass, sigma=SHIFT, which="LM", v0=rng.random(n_dof)
            )
        except Exception as e:
            raise SolverError(f"sparse eigensolver failed on {n_dof} DOFs: {e}")
        order = np.argsort(values)
        values, vectors = values[order], vectors[:, order]

    lam = float(values[1])
    u = vectors[:, 1]
    residual = float(np.linalg.norm(stiffness @ u - lam * (mass @ u)))
    return lam, residual


def lambda1_metric(
    g: MetricGraph,
    target_rel_tol: Optional[float] = None,
    h0: Optional[float] = None,
    dof_cap: Optional[int] = None
) -> GeneralizedEigenResult:
    """lambda_1 by nested mesh doubling with Richardson extrapolation.

    Refinement stops when consecutive values agree to target_rel_tol or when
    the next mesh would exceed the DOF cap; the latter leaves converged False.
    """
    ensure_valid(g)
    require_connected(g)
    settings = get_settings()
    tol = settings.fem_target_rel_tol if target_rel_tol is None else target_rel_tol
    cap = settings.fem_dof_cap if dof_cap is None else dof_cap
    if h0 is None:
        h0 = total_length(g) / settings.fem_initial_elements

    mesh = Mesh.uniform(g, h0)
    if mesh.dof_count(g.vertex_count) > cap:
        mesh = Mesh((2,) * g.edge_count)
        logger.warning(f"DOF cap {cap} below the base mesh, falling back to 2 elements per edge")

    lam, residual = solve_mesh(g, mesh)
    sequence = [(mesh.width(g), lam)]
    converged = False

    while True:
        finer = mesh.refined()
        if finer.dof_count(g.vertex_count) > cap:
            break
        lam_fine, residual = solve_mesh(g, finer)
        sequence.append((finer.width(g), lam_fine))
        mesh = finer
        change = abs(lam - lam_fine) / lam_fine
        lam = lam_fine
        if change < tol:
            converged = True
            break

    if len(sequence) >= 2:
        coarse, fine = sequence[-2][1], sequence[-1][1]
        extrapolated = (4.0 * fine - coarse) / 3.0
    else:
        extrapolated = lam

    dofs = mesh.dof_count(g.vertex_count)
    if not converged:
        logger.warning(
            f"lambda_1 not converged to {tol:g} within {cap} DOFs; "
            f"finest {lam:.10g}, extrapolated {extrapolated:.10g}"
        )
    logger.debug(f"lambda_1 = {lam:.12g} on {dofs} DOFs, extrapolated {extrapolated:.12g}")

    return GeneralizedEigenResult(
        lambda1=lam,
        mesh_sequence=sequence,
        extrapolated=extrapolated,
        residual=residual,
        converged=converged,
        dof_count=dofs,
    )
