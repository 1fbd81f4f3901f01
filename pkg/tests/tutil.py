"""Shared construction helpers for the test suite."""

from __future__ import annotations

import numpy as np

from orthomat.linalg import Field, Matrix
from orthomat.norms import NormedElement, operator_two


def gauss(rng: np.random.Generator, rows: int, cols: int, cplx: bool = False) -> np.ndarray:
    g = rng.standard_normal((rows, cols))
    if cplx:
        g = (g + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)
    return g


def rand_matrix(rng: np.random.Generator, n: int, cplx: bool = False) -> Matrix:
    return Matrix.of(gauss(rng, n, n, cplx))


def rand_hermitian(rng: np.random.Generator, n: int, cplx: bool = False) -> Matrix:
    g = gauss(rng, n, n, cplx)
    return Matrix.of((g + g.conj().T) / 2.0)


def rand_unitary(rng: np.random.Generator, n: int, cplx: bool = False) -> np.ndarray:
    q, r = np.linalg.qr(gauss(rng, n, n, cplx))
    d = np.diagonal(r)
    return q * (d / np.abs(d)).conj()


def op_el(m: Matrix) -> NormedElement:
    return NormedElement(m, operator_two())


def diag_real(*entries) -> Matrix:
    return Matrix.real(np.diag(np.asarray(entries, dtype=float)))


def coarse_trisect_min(f, lo: float, hi: float, coarse: int = 301, width: float = 1e-11):
    """Independent convex-minimization oracle: coarse bracketing grid, then
    trisection refinement. Returns (argmin, min)."""
    grid = np.linspace(lo, hi, coarse)
    vals = [f(t) for t in grid]
    i = int(np.argmin(vals))
    a = grid[max(0, i - 1)]
    b = grid[min(coarse - 1, i + 1)]
    while (b - a) > width * max(1.0, abs(a) + abs(b)):
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        if f(m1) <= f(m2):
            b = m2
        else:
            a = m1
    x = 0.5 * (a + b)
    return x, f(x)
