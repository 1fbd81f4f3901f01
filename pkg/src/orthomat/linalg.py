"""Dense real/complex matrix arithmetic and spectral primitives.

Everything downstream (norms, orthogonality deciders, attainment sets)
is built on the types and operations here. Matrices are immutable and
tagged with their scalar field; real-field data is stored as float64 so
imaginary parts are zero by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels
from .errors import NotHermitian, ShapeMismatch, ZeroOperator

HERMITIAN_RTOL = 1e-10
INTERSECT_COS_TOL = 1e-9
_BASIS_ORTHO_TOL = 1e-12


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds governing every decision.

    eq_tol     relative tolerance for norm-equality decisions
    psd_tol    eigenvalue floor for positivity checks
    gap_tol    relative spectral-gap threshold for top-subspace membership
    search_tol convergence tolerance for scalar minimization
    """

    eq_tol: float = 1e-9
    psd_tol: float = 1e-10
    gap_tol: float = 1e-10
    search_tol: float = 1e-11

    def __post_init__(self):
        for name in ("eq_tol", "psd_tol", "gap_tol", "search_tol"):
            v = getattr(self, name)
            if not (0.0 < v < 1e-3):
                raise ValueError(f"{name} must lie in (0, 1e-3), got {v}")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with an explicit scalar-field tag."""

    data: np.ndarray
    field: Field

    def __post_init__(self):
        a = np.asarray(self.data)
        if a.ndim == 1:
            a = a.reshape(-1, 1)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ShapeMismatch(f"matrix must be 2-D and nonempty, got shape {a.shape}")
        src = a
        if self.field is Field.REAL:
            if np.iscomplexobj(a) and np.any(a.imag != 0):
                raise ValueError("real-field matrix has nonzero imaginary parts")
            a = np.ascontiguousarray(a.real, dtype=np.float64)
        else:
            a = np.ascontiguousarray(a, dtype=np.complex128)
        # freeze a private buffer, never the caller's array
        if a is src or a.base is not None:
            a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def real(entries) -> "Matrix":
        return Matrix(np.asarray(entries), Field.REAL)

    @staticmethod
    def complex(entries) -> "Matrix":
        return Matrix(np.asarray(entries), Field.COMPLEX)

    @staticmethod
    def of(entries) -> "Matrix":
        """Infer the field tag from the dtype / imaginary content."""
        a = np.asarray(entries)
        if np.iscomplexobj(a) and np.any(a.imag != 0):
            return Matrix(a, Field.COMPLEX)
        return Matrix(a.real if np.iscomplexobj(a) else a, Field.REAL)

    @staticmethod
    def identity(n: int, field: Field = Field.REAL) -> "Matrix":
        return Matrix(np.eye(n), field)

    @staticmethod
    def zeros(rows: int, cols: int, field: Field = Field.REAL) -> "Matrix":
        return Matrix(np.zeros((rows, cols)), field)

    # -- basic structure ------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not np.any(self.data)

    def promoted(self) -> "Matrix":
        """The same matrix tagged complex."""
        if self.field is Field.COMPLEX:
            return self
        return Matrix(self.data.astype(np.complex128), Field.COMPLEX)

    # -- arithmetic -----------------------------------------------------

    def _join_field(self, other: "Matrix") -> Field:
        if self.field is Field.COMPLEX or other.field is Field.COMPLEX:
            return Field.COMPLEX
        return Field.REAL

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.data.shape != other.data.shape:
            raise ShapeMismatch("matrix addition requires equal shapes")
        return Matrix(self.data + other.data, self._join_field(other))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.data.shape != other.data.shape:
            raise ShapeMismatch("matrix subtraction requires equal shapes")
        return Matrix(self.data - other.data, self._join_field(other))

    def __neg__(self) -> "Matrix":
        return Matrix(-self.data, self.field)

    def scale(self, c) -> "Matrix":
        c = complex(c)
        if c.imag == 0.0:
            return Matrix(self.data * c.real, self.field)
        return Matrix(self.data * c, Field.COMPLEX)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatch("matrix product dimension mismatch")
        return Matrix(self.data @ other.data, self._join_field(other))

    def adjoint(self) -> "Matrix":
        return Matrix(self.data.conj().T, self.field)


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal columns spanning a subspace (zero columns = {0})."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.basis)
        if b.ndim != 2 or b.shape[0] != self.ambient_dim:
            raise ShapeMismatch(
                f"basis shape {b.shape} incompatible with ambient dim {self.ambient_dim}"
            )
        if b.shape[1] > 0:
            gram = b.conj().T @ b
            if np.max(np.abs(gram - np.eye(b.shape[1]))) > _BASIS_ORTHO_TOL:
                raise ValueError("basis columns are not orthonormal")
        src = b
        b = np.ascontiguousarray(b)
        if b is src or b.base is not None:
            b = b.copy()
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def contains(self, v: np.ndarray, tol: float = 1e-9) -> bool:
        """Whether the (unit) vector lies in the span, by projection residual."""
        v = np.asarray(v).reshape(-1)
        proj = self.basis @ (self.basis.conj().T @ v)
        return float(np.linalg.norm(v - proj)) <= tol * max(1.0, float(np.linalg.norm(v)))


# -- operations ----------------------------------------------------------


def adjoint(m: Matrix) -> Matrix:
    """Conjugate transpose; real field is preserved."""
    return m.adjoint()


def hermitian_residual(a: np.ndarray) -> float:
    """max |a - a^H| relative to the largest entry magnitude."""
    resid = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    return resid / scale if scale > 0 else resid


def hermitian_eigen(
    m: Matrix, tol: Tolerances = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues descending, V) with m = V diag(w) V^H and
    orthonormal columns. Raises NotHermitian when the symmetry residual
    exceeds the entrywise relative threshold.
    """
    if not m.is_square:
        raise NotHermitian("matrix is not square")
    if hermitian_residual(m.data) > HERMITIAN_RTOL:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    w, v = _kernels.eigh(m.data)
    return w, v


def svd(
    m: Matrix, tol: Tolerances = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD as (singular values descending, left vectors, right vectors).

    m = left @ diag(s) @ right^H.
    """
    u, s, vh = _kernels.svd(m.data)
    return s, u, vh.conj().T


def operator_norm(m: Matrix) -> float:
    """Largest singular value."""
    return _kernels.op_norm(m.data)


def _top_subspace(
    m: Matrix, tol: Tolerances
) -> tuple[SubspaceBasis, bool]:
    """Right-singular subspace of the (near-)maximal singular values.

    Second return value flags an ill-conditioned cut: the relative gap to
    the first excluded singular value lies within a decade of gap_tol, so
    the subspace dimension is numerically fragile.
    """
    if m.is_zero:
        raise ZeroOperator("the zero matrix attains its norm everywhere")
    s, _, v = svd(m, tol)
    s1 = s[0]
    keep = s >= s1 * (1.0 - tol.gap_tol)
    k = int(np.sum(keep))
    ill = False
    if k < s.size:
        rel_gap = (s1 - s[k]) / s1
        ill = rel_gap < 10.0 * tol.gap_tol
    return SubspaceBasis(m.cols, v[:, :k]), ill


def top_singular_subspace(m: Matrix, tol: Tolerances = DEFAULT_TOL) -> SubspaceBasis:
    """Orthonormal basis of the span of right singular vectors at the top
    singular value (ties within gap_tol included)."""
    basis, _ = _top_subspace(m, tol)
    return basis


def intersect(
    a: SubspaceBasis, b: SubspaceBasis, tol: Tolerances = DEFAULT_TOL
) -> SubspaceBasis:
    """Intersection of two subspaces via principal angles.

    Directions whose principal cosine is within INTERSECT_COS_TOL of 1 are
    counted as common. May return the zero subspace.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ShapeMismatch("subspaces live in different ambient dimensions")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        dtype = np.result_type(a.basis.dtype, b.basis.dtype)
        return SubspaceBasis(n, np.zeros((n, 0), dtype=dtype))
    cross = a.basis.conj().T @ b.basis
    u, c, _ = _kernels.svd(cross)
    c = np.minimum(c, 1.0)
    k = int(np.sum(c >= 1.0 - INTERSECT_COS_TOL))
    return SubspaceBasis(n, a.basis @ u[:, :k])
