"""numpy/LAPACK-backed spectral kernels (fallback backend).

Same contract as the compiled Jacobi extension: eigenvalues and singular
values are returned in descending order, factors are thin.
"""

from __future__ import annotations

import numpy as np


def eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    w, v = np.linalg.eigh(a)
    return w[::-1].copy(), v[:, ::-1].copy()


def eigvals_herm(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, descending."""
    return np.linalg.eigvalsh(a)[::-1].copy()


def svd(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin singular value decomposition a = U @ diag(s) @ Vh."""
    return np.linalg.svd(a, full_matrices=False)


def singvals(a: np.ndarray) -> np.ndarray:
    """Singular values only, descending."""
    return np.linalg.svd(a, compute_uv=False)
