"""Spectral kernel backends.

Two interchangeable implementations of the small-matrix spectral
primitives every decider sits on:

* ``_jacobi`` — compiled Cython extension (cyclic Jacobi eigensolver and
  one-sided Jacobi SVD), which beats LAPACK's fixed per-call cost on the
  tiny matrices the deciders hammer (see benchmarks/bench_kernels.py);
* ``_reference`` — numpy/LAPACK fallback, always available.

The compiled backend is selected at import when present; set
``ORTHOMAT_KERNEL=numpy`` or ``ORTHOMAT_KERNEL=jacobi`` to force a choice.
Because Jacobi does an order of magnitude more arithmetic than the
bidiagonalization methods, the compiled backend only pays below a size
crossover (measured by the benchmark); larger problems are routed to
LAPACK even when the extension is loaded. All functions accept float64
or complex128 2-D arrays and return values in descending order.
"""

from __future__ import annotations

import os

import numpy as np

from . import _reference

_FORCE = os.environ.get("ORTHOMAT_KERNEL", "").strip().lower()

# crossover sizes measured on the bundled benchmark; above these the
# LAPACK path is faster even with the extension present. The win is on
# the value-only primitives (no factor accumulation): those are also the
# calls the scalar searches make hundreds of times per decision.
SVD_CUTOFF = 3
EIGH_CUTOFF = 4

if _FORCE in ("numpy", "reference", "fallback"):
    _ext = None
    BACKEND = "numpy"
else:
    try:
        from . import _jacobi as _ext  # type: ignore[attr-defined]

        BACKEND = "jacobi"
    except ImportError:
        if _FORCE == "jacobi":
            raise
        _ext = None
        BACKEND = "numpy"


def backend_name() -> str:
    return BACKEND


def _prep(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-D array")
    dtype = np.complex128 if np.iscomplexobj(a) else np.float64
    return np.ascontiguousarray(a, dtype=dtype)


def eigh(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian eigendecomposition; eigenvalues descending, columns of V
    are the matching orthonormal eigenvectors. Factor accumulation erases
    the Jacobi advantage, so this always routes to LAPACK."""
    return _reference.eigh(_prep(a))


def eigvals_herm(a: np.ndarray) -> np.ndarray:
    """Hermitian eigenvalues, descending."""
    a = _prep(a)
    if _ext is not None and a.shape[0] <= EIGH_CUTOFF:
        return _ext.eigvals_herm(a)
    return _reference.eigvals_herm(a)


def svd(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD (U, s, Vh) with s descending; routed like eigh."""
    return _reference.svd(_prep(a))


def singvals(a: np.ndarray) -> np.ndarray:
    """Singular values, descending."""
    a = _prep(a)
    if _ext is not None and min(a.shape) <= SVD_CUTOFF:
        return _ext.singvals(a)
    return _reference.singvals(a)


def op_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    s = singvals(a)
    return float(s[0]) if s.size else 0.0
