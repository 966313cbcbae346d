"""Dense symmetric matrices and their eigenvalues."""
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
import scipy.linalg as sla

from config.settings import get_settings
from utils.exceptions import SolverError, ValidationError
from utils.logger import get_logger

logger = get_logger()

METHODS = ("auto", "jacobi", "lapack")


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Dense symmetric matrix; the lower triangle is authoritative."""
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValidationError(f"symmetric matrix must be square, got shape {a.shape}")
        lower = np.tril(a)
        full = lower + np.tril(a, -1).T
        full.setflags(write=False)
        object.__setattr__(self, "entries", full)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.entries)))

    def to_list(self) -> List[List[float]]:
        return self.entries.tolist()


def symmetric_eigenvalues(m: SymmetricMatrix, method: str = "auto") -> List[float]:
    """All eigenvalues in nondecreasing order.

    Args:
        m: Finite symmetric matrix of order >= 1
        method: "jacobi" (cyclic Jacobi rotations), "lapack" (tridiagonal
            reduction via scipy), or "auto" (Jacobi up to the configured order)
    """
    if method not in METHODS:
        raise ValidationError(f"unknown eigenvalue method '{method}', expected one of {METHODS}")
    if m.order < 1:
        raise ValidationError("matrix must have order >= 1")
    if not m.is_finite():
        raise ValidationError("matrix has non-finite entries")

    settings = get_settings()
    if method == "auto":
        method = "jacobi" if m.order <= settings.jacobi_max_order else "lapack"

    if method == "lapack":
        values = sla.eigvalsh(m.entries)
    else:
        values = cyclic_jacobi(
            m.entries,
            tol=settings.jacobi_tolerance,
            max_sweeps=settings.jacobi_max_sweeps
        )
    return sorted(float(x) for x in values)


def cyclic_jacobi(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by row-cyclic Jacobi sweeps.

    Sweeps until the off-diagonal Frobenius norm is at most tol times the
    Frobenius norm of the matrix.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n == 1 or scale == 0.0:
        return np.diag(a).copy()

    for sweep in range(max_sweeps):
        off = _off_norm(a)
        if off <= tol * scale:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n})")
            return np.diag(a).copy()

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                a[p, q] = 0.0
                a[q, p] = 0.0

    if _off_norm(a) <= tol * scale:
        return np.diag(a).copy()
    raise SolverError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def smallest_eigenpair_residual(m: SymmetricMatrix, vector: Optional[np.ndarray] = None) -> float:
    """||m x|| / ||m|| for x the normalized all-ones vector (the zero mode of a Laplacian)."""
    x = np.ones(m.order) if vector is None else np.asarray(vector, dtype=np.float64)
    x = x / np.linalg.norm(x)
    norm = np.linalg.norm(m.entries)
    if norm == 0.0:
        return 0.0
    return float(np.linalg.norm(m.entries @ x) / norm)
