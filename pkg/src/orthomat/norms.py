"""Norm families and the normed-element abstraction.

Every orthogonality decider consumes elements exclusively through
``norm_of``, which is what keeps the relation logic generic across the
operator norm, Schatten-p norms and entrywise vector p-norms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import HypothesisViolated, ShapeMismatch
from .linalg import DEFAULT_TOL, Matrix, Tolerances, operator_norm


class NormKind(enum.Enum):
    OPERATOR_TWO = "operator"
    SCHATTEN_P = "schatten"
    VECTOR_P = "vector-p"


@dataclass(frozen=True)
class NormDescriptor:
    kind: NormKind
    p: float | None = None

    def __post_init__(self):
        if self.kind is NormKind.OPERATOR_TWO:
            if self.p is not None:
                raise ValueError("operator norm takes no exponent")
        else:
            if self.p is None or self.p < 1.0:
                raise ValueError("p must be >= 1 (quasi-norms are out of scope)")


def operator_two() -> NormDescriptor:
    return NormDescriptor(NormKind.OPERATOR_TWO)


def schatten(p: float) -> NormDescriptor:
    return NormDescriptor(NormKind.SCHATTEN_P, float(p))


def vector_p(p: float) -> NormDescriptor:
    return NormDescriptor(NormKind.VECTOR_P, float(p))


@dataclass(frozen=True)
class NormedElement:
    """A matrix paired with the norm it is measured in."""

    value: Matrix
    norm: NormDescriptor

    def __post_init__(self):
        if self.norm.kind is NormKind.VECTOR_P and self.value.cols != 1:
            raise ShapeMismatch("vector p-norms require a single-column matrix")

    def with_value(self, m: Matrix) -> "NormedElement":
        return NormedElement(m, self.norm)


def _power_sum_norm(vals: np.ndarray, p: float) -> float:
    # scale by the maximum so large p cannot overflow
    top = float(np.max(vals)) if vals.size else 0.0
    if top == 0.0:
        return 0.0
    return top * float(np.sum((vals / top) ** p) ** (1.0 / p))


def norm_of(e: NormedElement) -> float:
    """Evaluate the element's norm; always finite and nonnegative."""
    kind = e.norm.kind
    if kind is NormKind.OPERATOR_TWO:
        return operator_norm(e.value)
    if kind is NormKind.SCHATTEN_P:
        s = _kernels.singvals(e.value.data)
        return _power_sum_norm(s, e.norm.p)
    return _power_sum_norm(np.abs(e.value.data.reshape(-1)), e.norm.p)


def shifted_norm(x: NormedElement, y: NormedElement):
    """Callable lam -> ||x + lam*y||, the profile every scalar search uses.

    Works on the raw arrays so a line search is not charged for matrix
    wrapper construction on every evaluation.
    """
    xd, yd = x.value.data, y.value.data
    kind, p = x.norm.kind, x.norm.p
    if kind is NormKind.VECTOR_P:
        xa, ya = xd.reshape(-1), yd.reshape(-1)

        def f_vec(lam) -> float:
            return _power_sum_norm(np.abs(xa + lam * ya), p)

        return f_vec
    if kind is NormKind.OPERATOR_TWO:

        def f_op(lam) -> float:
            s = _kernels.singvals(xd + lam * yd)
            return float(s[0]) if s.size else 0.0

        return f_op

    def f_schatten(lam) -> float:
        return _power_sum_norm(_kernels.singvals(xd + lam * yd), p)

    return f_schatten


def _power_sum_rows(rows: np.ndarray, p: float) -> np.ndarray:
    top = rows.max(axis=1, initial=0.0)
    safe = np.where(top > 0.0, top, 1.0)
    out = safe * np.sum((rows / safe[:, None]) ** p, axis=1) ** (1.0 / p)
    return np.where(top > 0.0, out, 0.0)


def norm_profile(x: NormedElement, y: NormedElement, lambdas) -> np.ndarray:
    """||x + lam*y|| for every lam in lambdas, evaluated as one batch.

    Grid-based deciders (Roberts) call this instead of looping norm_of;
    the values are the same norms, computed through LAPACK's stacked SVD.
    """
    lams = np.asarray(lambdas)
    stack = x.value.data[None, :, :] + lams[:, None, None] * y.value.data[None, :, :]
    kind = x.norm.kind
    if kind is NormKind.VECTOR_P:
        flat = np.abs(stack.reshape(stack.shape[0], -1))
        return _power_sum_rows(flat, x.norm.p)
    s = np.linalg.svd(stack, compute_uv=False)
    if kind is NormKind.OPERATOR_TWO:
        return np.ascontiguousarray(s[:, 0])
    return _power_sum_rows(s, x.norm.p)


def uin_singular_match(
    a: Matrix, b: Matrix, lam: complex, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Whether b + lam*a and b - lam*a share their full singular value list.

    Requires b^H a = 0 (disjoint-range hypothesis); raises
    HypothesisViolated otherwise. The comparison is elementwise within
    eq_tol relative to the top singular value.
    """
    if a.data.shape != b.data.shape:
        raise ShapeMismatch("operands must have equal shapes")
    cross = float(np.max(np.abs(b.data.conj().T @ a.data)))
    scale = operator_norm(a) * operator_norm(b)
    if cross > tol.eq_tol * max(scale, 1e-300):
        raise HypothesisViolated("b^H a is not zero within tolerance")
    plus = _kernels.singvals(b.data + complex(lam) * a.data)
    minus = _kernels.singvals(b.data - complex(lam) * a.data)
    top = max(float(plus[0]) if plus.size else 0.0, float(minus[0]) if minus.size else 0.0)
    if top == 0.0:
        return True
    return bool(np.max(np.abs(plus - minus)) <= tol.eq_tol * top)
