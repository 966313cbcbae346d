"""Discrete Laplacian spectrum, exact Cheeger constant and their estimates."""
from .linalg import SymmetricMatrix, symmetric_eigenvalues, cyclic_jacobi
from .laplacian import laplacian_matrix, laplacian_spectrum, fiedler_value, zero_eigenvalue_multiplicity
from .cheeger import DiscreteCheegerResult, discrete_cheeger
from .bounds import check_fiedler_bounds, check_alon_milman

__all__ = [
    "SymmetricMatrix",
    "symmetric_eigenvalues",
    "cyclic_jacobi",
    "laplacian_matrix",
    "laplacian_spectrum",
    "fiedler_value",
    "zero_eigenvalue_multiplicity",
    "DiscreteCheegerResult",
    "discrete_cheeger",
    "check_fiedler_bounds",
    "check_alon_milman"
]
