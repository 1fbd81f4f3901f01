# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Jacobi spectral kernels for small dense matrices.

Cyclic two-sided Jacobi for Hermitian eigenproblems and one-sided Jacobi
for the SVD, specialized for float64 and complex128 via fused types.
Rotations are applied until every off-diagonal (resp. column cross
product) falls below 1e-15 of the problem scale, which leaves residuals
orders of magnitude inside the package's 1e-9 reconstruction contracts.

The one-sided solver works on the transpose so that the vectors being
rotated are contiguous rows.
"""

import numpy as np

from libc.math cimport sqrt

ctypedef double complex dcomplex

ctypedef fused scalar:
    double
    dcomplex

cdef double _EPS = 1e-15
cdef int _MAX_SWEEPS = 60


cdef inline scalar _conj(scalar x) nogil:
    if scalar is dcomplex:
        return x.conjugate()
    else:
        return x


cdef inline double _abs2(scalar x) nogil:
    if scalar is dcomplex:
        return x.real * x.real + x.imag * x.imag
    else:
        return x * x


cdef inline double _re(scalar x) nogil:
    if scalar is dcomplex:
        return x.real
    else:
        return x


def _onesided_sweeps(scalar[:, ::1] bt, scalar[:, ::1] vt, double[::1] norms2, bint accum):
    """One-sided Jacobi on the rows of bt (the columns of the matrix being
    factored); vt rows accumulate the right rotations when accum is set.

    Squared row norms live in norms2: refreshed at every sweep start and
    updated analytically after each rotation, so a pair visit costs one
    cross product.
    """
    cdef Py_ssize_t n = bt.shape[0]
    cdef Py_ssize_t m = bt.shape[1]
    cdef Py_ssize_t i, j, k, sweep
    cdef double aii, ajj, mag, mag2, tau, t, c, s, acc
    cdef scalar aij, alpha, ac, bi, bj
    cdef double eps2 = _EPS * _EPS
    cdef int rotated
    with nogil:
        for sweep in range(_MAX_SWEEPS):
            rotated = 0
            for i in range(n):
                acc = 0.0
                for k in range(m):
                    acc += _abs2(bt[i, k])
                norms2[i] = acc
            for i in range(n - 1):
                for j in range(i + 1, n):
                    aii = norms2[i]
                    ajj = norms2[j]
                    aij = 0
                    for k in range(m):
                        aij += _conj(bt[i, k]) * bt[j, k]
                    mag2 = _abs2(aij)
                    if mag2 <= eps2 * aii * ajj or mag2 == 0.0:
                        continue
                    rotated = 1
                    mag = sqrt(mag2)
                    alpha = aij / mag
                    ac = _conj(alpha)
                    tau = (ajj - aii) / (2.0 * mag)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    for k in range(m):
                        bi = bt[i, k]
                        bj = bt[j, k]
                        bt[i, k] = c * bi - s * (ac * bj)
                        bt[j, k] = s * (alpha * bi) + c * bj
                    norms2[i] = aii - t * mag
                    norms2[j] = ajj + t * mag
                    if accum:
                        for k in range(n):
                            bi = vt[i, k]
                            bj = vt[j, k]
                            vt[i, k] = c * bi - s * (ac * bj)
                            vt[j, k] = s * (alpha * bi) + c * bj
            if rotated == 0:
                break
    return sweep


def _herm_sweeps(scalar[:, ::1] a, scalar[:, ::1] vt, bint accum, double anorm):
    """In-place cyclic Jacobi diagonalization of a Hermitian matrix; the
    rows of vt accumulate the eigenvector columns."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k, sweep
    cdef double mag, tau, t, c, s, thresh
    cdef scalar apq, alpha, ac, xp, xq
    cdef int rotated
    thresh = _EPS * anorm
    with nogil:
        for sweep in range(_MAX_SWEEPS):
            rotated = 0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    mag = sqrt(_abs2(apq))
                    if mag <= thresh:
                        continue
                    rotated = 1
                    alpha = apq / mag
                    ac = _conj(alpha)
                    tau = (_re(a[q, q]) - _re(a[p, p])) / (2.0 * mag)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    # rows p, q of J^H A
                    for k in range(n):
                        xp = a[p, k]
                        xq = a[q, k]
                        a[p, k] = c * xp - s * (alpha * xq)
                        a[q, k] = s * (ac * xp) + c * xq
                    # columns p, q of (J^H A) J
                    for k in range(n):
                        xp = a[k, p]
                        xq = a[k, q]
                        a[k, p] = c * xp - s * (ac * xq)
                        a[k, q] = s * (alpha * xp) + c * xq
                    a[p, q] = 0
                    a[q, p] = 0
                    if accum:
                        # vt rows are V columns: V <- V J transposes to row ops
                        for k in range(n):
                            xp = vt[p, k]
                            xq = vt[q, k]
                            vt[p, k] = c * xp - s * (ac * xq)
                            vt[q, k] = s * (alpha * xp) + c * xq
            if rotated == 0:
                break
    return sweep


def _row_norms(scalar[:, ::1] bt, double[::1] out):
    cdef Py_ssize_t n = bt.shape[0]
    cdef Py_ssize_t m = bt.shape[1]
    cdef Py_ssize_t i, k
    cdef double acc
    with nogil:
        for i in range(n):
            acc = 0.0
            for k in range(m):
                acc += _abs2(bt[i, k])
            out[i] = sqrt(acc)
    return 0


def _frob(scalar[:, ::1] a):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t i, k
    cdef double acc = 0.0
    with nogil:
        for i in range(m):
            for k in range(n):
                acc += _abs2(a[i, k])
    return sqrt(acc)


# -- numpy-facing wrappers ---------------------------------------------------


def _svd_work(a):
    """One-sided Jacobi SVD of a (m >= n assumed). Returns (U, s, Vh)."""
    m, n = a.shape
    bt = np.ascontiguousarray(a.T)  # rows of bt are the columns of a
    if bt.base is a or not bt.flags.owndata:
        bt = bt.copy()
    vt = np.eye(n, dtype=bt.dtype, order="C")
    s = np.empty(n, dtype=np.float64)
    _onesided_sweeps(bt, vt, s, True)
    _row_norms(bt, s)
    order = np.argsort(-s, kind="stable")
    s = s[order]
    bt = bt[order]
    vt = np.ascontiguousarray(vt[order])
    u = np.zeros((m, n), dtype=bt.dtype, order="C")
    smax = s[0] if n else 0.0
    cutoff = max(m, n) * 1e-14 * smax
    good = []
    for i in range(n):
        if s[i] > cutoff and s[i] > 0.0:
            u[:, i] = bt[i] / s[i]
            good.append(i)
    # complete columns for (numerically) zero singular values
    missing = [i for i in range(n) if i not in good]
    if missing:
        basis = [u[:, i] for i in good]
        cand = 0
        for i in missing:
            while cand < m:
                e = np.zeros(m, dtype=bt.dtype)
                e[cand] = 1.0
                for w in basis:
                    e = e - w * np.vdot(w, e)
                nrm = np.linalg.norm(e)
                cand += 1
                if nrm > 0.5:
                    e = e / nrm
                    u[:, i] = e
                    basis.append(e)
                    break
    return u, s, vt.conj()


def svd(a):
    """Thin SVD (U, s, Vh), singular values descending."""
    a = np.asarray(a)
    if a.shape[0] >= a.shape[1]:
        return _svd_work(a)
    u, s, vh = _svd_work(np.ascontiguousarray(a.conj().T))
    return vh.conj().T, s, u.conj().T


def singvals(a):
    """Singular values only, descending."""
    a = np.asarray(a)
    if a.shape[0] < a.shape[1]:
        bt = np.array(a, copy=True, order="C")
    else:
        bt = np.ascontiguousarray(a.T)
        if bt.base is a or not bt.flags.owndata:
            bt = bt.copy()
    dummy = np.zeros((1, 1), dtype=bt.dtype)
    s = np.empty(bt.shape[0], dtype=np.float64)
    _onesided_sweeps(bt, dummy, s, False)
    _row_norms(bt, s)
    s[::-1].sort()
    return s


def eigh(a):
    """Hermitian eigendecomposition (w, V), eigenvalues descending."""
    work = np.array(a, copy=True, order="C")
    n = work.shape[0]
    vt = np.eye(n, dtype=work.dtype, order="C")
    anorm = _frob(work)
    if anorm > 0.0:
        _herm_sweeps(work, vt, True, anorm)
    w = np.real(np.diagonal(work)).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], np.ascontiguousarray(vt[order].T)


def eigvals_herm(a):
    """Hermitian eigenvalues, descending."""
    work = np.array(a, copy=True, order="C")
    dummy = np.zeros((1, 1), dtype=work.dtype)
    anorm = _frob(work)
    if anorm > 0.0:
        _herm_sweeps(work, dummy, False, anorm)
    w = np.real(np.diagonal(work)).copy()
    w[::-1].sort()
    return w
