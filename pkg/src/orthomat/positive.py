"""Orthogonality structure on the positive cone.

Positive-semidefinite certification and square roots, the additive norm
inequality chain for PSD pairs, the max-norm characterization of
isosceles orthogonality, attainment-vector witnesses, accretivity, the
projection propositions, and the impossibility results for invertible
positive pairs. Several operations are theorem monitors: they check a
guaranteed implication on every call and raise TheoremViolation on a
decisive breach.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    NotHermitian,
    NotPsd,
    NotProjection,
    PreconditionUnmet,
    TheoremViolation,
    ZeroOperator,
)
from .linalg import (
    DEFAULT_TOL,
    Field,
    Matrix,
    Tolerances,
    _top_subspace,
    hermitian_residual,
    intersect,
    operator_norm,
)
from .norms import NormedElement, operator_two
from .ortho import Decision, OrthReport, Relation, bj_check, is_decisive, iso_check
from .hilbert import _herm, _mix_to_null, bj_spectral, inner

_HERM_RTOL = 1e-10
_PROJ_ATOL = 1e-9


@dataclass(frozen=True)
class PsdCertificate:
    """Positivity certificate with the principal square root."""

    hermitian_residual: float
    min_eigenvalue: float
    sqrt: Matrix


@dataclass(frozen=True)
class MaxMinPair:
    """Selection of the larger-norm operator, ties going to the first."""

    big: Matrix
    small: Matrix
    tie: bool


def psd_certify(a: Matrix, tol: Tolerances = DEFAULT_TOL) -> PsdCertificate:
    """Certify positive semidefiniteness and compute the square root.

    Eigenvalues inside the psd_tol band below zero are clamped to zero for
    the root; anything more negative raises NotPsd.
    """
    if not a.is_square:
        raise NotHermitian("matrix is not square")
    resid = hermitian_residual(a.data)
    if resid > _HERM_RTOL:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    w, v = _kernels.eigh(_herm(a.data))
    norm = float(np.max(np.abs(w))) if w.size else 0.0
    lam_min = float(w[-1])
    if lam_min < -tol.psd_tol * norm:
        raise NotPsd(f"minimum eigenvalue {lam_min} below the positivity floor")
    root = (v * np.sqrt(np.maximum(w, 0.0))) @ v.conj().T
    root = _herm(root)
    if a.field is Field.REAL:
        root = root.real
    return PsdCertificate(resid, lam_min, Matrix(root, a.field))


@dataclass(frozen=True)
class KittanehChain:
    lower: float
    diff: float
    mid: float
    sum: float
    upper: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.lower, self.diff, self.mid, self.sum, self.upper)


def kittaneh_bounds(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> KittanehChain:
    """Five-term norm chain for PSD operators.

    max(|A|,|B|) - |A^1/2 B^1/2| <= |A-B| <= max(|A|,|B|) <= |A+B|
    <= max(|A|,|B|) + |A^1/2 B^1/2|, asserted with 1e-9*mid slack.
    """
    ca = psd_certify(a, tol)
    cb = psd_certify(b, tol)
    cross = operator_norm(ca.sqrt @ cb.sqrt)
    mid = max(operator_norm(a), operator_norm(b))
    chain = KittanehChain(
        lower=mid - cross,
        diff=operator_norm(a - b),
        mid=mid,
        sum=operator_norm(a + b),
        upper=mid + cross,
    )
    slack = 1e-9 * chain.mid
    seq = chain.as_tuple()
    for i in range(4):
        if seq[i] > seq[i + 1] + slack:
            raise TheoremViolation(
                "positive-pair norm chain violated",
                evidence={"chain": seq, "position": i},
            )
    return chain


def max_min_pair(a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL) -> MaxMinPair:
    na, nb = operator_norm(a), operator_norm(b)
    tie = abs(na - nb) <= tol.eq_tol * max(na, nb, 1e-300)
    if nb <= na or tie:
        return MaxMinPair(a, b, tie)
    return MaxMinPair(b, a, tie)


def positive_iso_check(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """Isosceles orthogonality of PSD operators via the max-norm identity.

    Holds exactly when |A+B| = |A-B| = max(|A|, |B|). The decision is
    cross-checked against the generic isosceles decider, which must agree
    whenever both are decisive.
    """
    psd_certify(a, tol)
    psd_certify(b, tol)
    n_plus = operator_norm(a + b)
    n_minus = operator_norm(a - b)
    mx = max(operator_norm(a), operator_norm(b))
    scale = max(n_plus, n_minus, mx)
    band = tol.eq_tol * scale
    dev = max(abs(n_plus - mx), abs(n_minus - mx))
    decision = Decision.HOLDS if dev <= band else Decision.FAILS
    report = OrthReport(
        Relation.ISO, decision, -dev, scale, band,
        confidence="positive-max",
        details={"norm_plus": n_plus, "norm_minus": n_minus, "norm_max": mx},
    )
    generic = iso_check(NormedElement(a, operator_two()), NormedElement(b, operator_two()), tol)
    if (
        report.decision is not generic.decision
        and is_decisive(report)
        and is_decisive(generic)
    ):
        raise TheoremViolation(
            "max-norm characterization disagrees with the isosceles decider",
            evidence={"positive": report.to_dict(), "generic": generic.to_dict()},
        )
    return report


def _attainment_witness(
    a: Matrix, b: Matrix, m_sel: Matrix, tol: Tolerances
) -> np.ndarray | None:
    """Unit x with |M x| = |M| and Re<BAx, x> within the band, if any."""
    basis, _ = _top_subspace(m_sel, tol)
    form = _herm(b.data @ a.data)
    comp = basis.basis.conj().T @ form @ basis.basis
    w, v = _kernels.eigh(comp)
    band = tol.eq_tol * operator_norm(a) * operator_norm(b)
    if float(w[-1]) > band:
        return None
    x = basis.basis @ v[:, -1]
    return x / np.linalg.norm(x)


def positive_iso_witness(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray | None:
    """Witness vector for isosceles orthogonality of a PSD pair.

    Exists exactly when the pair is isosceles orthogonal: a unit x
    attaining the norm of the larger operator with Re<BAx, x> <= 0. On a
    norm tie both selections are tried and must agree on existence.
    """
    psd_certify(a, tol)
    psd_certify(b, tol)
    if a.is_zero or b.is_zero:
        raise ZeroOperator("witness construction needs nonzero operators")
    n_plus = operator_norm(a + b)
    mm = max_min_pair(a, b, tol)
    mx = operator_norm(mm.big)
    band = tol.eq_tol * max(n_plus, mx)
    if n_plus > mx + band:
        witness = None
    else:
        witness = _attainment_witness(a, b, mm.big, tol)
        if mm.tie and mm.big is not mm.small:
            other = _attainment_witness(a, b, mm.small, tol)
            if (witness is None) != (other is None):
                raise TheoremViolation(
                    "witness existence depends on the tie-broken selection",
                    evidence={"tie": True},
                )
    check = positive_iso_check(a, b, tol)
    if is_decisive(check) and (witness is not None) != check.holds:
        raise TheoremViolation(
            "witness existence disagrees with the isosceles decision",
            evidence={"decision": check.to_dict(), "witness_found": witness is not None},
        )
    return witness


def accretive_check(t: Matrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether the Hermitian (Cartesian real) part is PSD."""
    if not t.is_square:
        return False
    h = Matrix(_herm(t.data), t.field if t.field is Field.COMPLEX else Field.REAL)
    try:
        psd_certify(h, tol)
        return True
    except NotPsd:
        return False


@dataclass(frozen=True)
class AccretiveIsoBundle:
    triggered: bool
    iso: OrthReport
    bj_ab: OrthReport | None = None
    bj_ba: OrthReport | None = None
    witness: np.ndarray | None = None
    witness_pairing: float | None = None


def accretive_iso_corollary(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> AccretiveIsoBundle:
    """Monitor for PSD pairs with accretive BA: isosceles orthogonality
    forces BJ orthogonality in at least one direction, with a witness at
    which <BAx, x> vanishes."""
    psd_certify(a, tol)
    psd_certify(b, tol)
    ba = Matrix.of(b.data @ a.data)
    if not accretive_check(ba, tol):
        raise PreconditionUnmet("BA is not accretive")
    iso = iso_check(NormedElement(a, operator_two()), NormedElement(b, operator_two()), tol)
    if not iso.holds:
        return AccretiveIsoBundle(triggered=False, iso=iso)
    rpt_ab, _ = bj_spectral(a, b, tol)
    rpt_ba, _ = bj_spectral(b, a, tol)
    if not (rpt_ab.holds or rpt_ba.holds):
        raise TheoremViolation(
            "accretive isosceles pair with neither BJ direction holding",
            evidence={"bj_ab": rpt_ab.to_dict(), "bj_ba": rpt_ba.to_dict()},
        )
    witness = positive_iso_witness(a, b, tol)
    pairing = None
    if witness is not None:
        pairing = abs(inner(ba.data @ witness, witness))
        scale = operator_norm(a) * operator_norm(b)
        if pairing > 1e-7 * max(scale, 1e-300):
            raise TheoremViolation(
                "witness pairing <BAx, x> does not vanish",
                evidence={"pairing": pairing, "scale": scale},
            )
    return AccretiveIsoBundle(
        triggered=True, iso=iso, bj_ab=rpt_ab, bj_ba=rpt_ba,
        witness=witness, witness_pairing=pairing,
    )


@dataclass(frozen=True)
class InvertiblePairBundle:
    iso: OrthReport
    bj: OrthReport

    @property
    def both_fail(self) -> bool:
        return self.iso.decision is Decision.FAILS and self.bj.decision is Decision.FAILS


def invertible_pair_impossibility(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> InvertiblePairBundle:
    """Strictly positive definite pairs are never isosceles or BJ orthogonal.

    Requires min eigenvalues >= 10 * psd_tol * norm for both operands.
    A decisive Holds on either relation is raised as TheoremViolation.
    """
    for m in (a, b):
        cert = psd_certify(m, tol)
        if cert.min_eigenvalue < 10.0 * tol.psd_tol * operator_norm(m):
            raise PreconditionUnmet("operand is not strictly positive definite")
    ea = NormedElement(a, operator_two())
    eb = NormedElement(b, operator_two())
    iso = iso_check(ea, eb, tol)
    bj = bj_check(ea, eb, tol)
    for name, rpt in (("iso", iso), ("bj", bj)):
        if rpt.decision is Decision.HOLDS and is_decisive(rpt):
            raise TheoremViolation(
                f"positive definite pair decided {name}-orthogonal",
                evidence={"relation": name, "report": rpt.to_dict()},
            )
    return InvertiblePairBundle(iso, bj)


def _require_projection(p: Matrix) -> None:
    if not p.is_square:
        raise NotProjection("projection must be square")
    if float(np.max(np.abs(p.data - p.data.conj().T))) > _PROJ_ATOL:
        raise NotProjection("projection must be Hermitian")
    if operator_norm(Matrix.of(p.data @ p.data - p.data)) > _PROJ_ATOL:
        raise NotProjection("matrix is not idempotent")


@dataclass(frozen=True)
class ProjectionBundle:
    iso: OrthReport
    product_norm: float
    product_zero: bool
    bj_pq: OrthReport | None = None
    bj_qp: OrthReport | None = None
    identity_branch: bool = False


def projection_propositions(
    p: Matrix, q: Matrix, tol: Tolerances = DEFAULT_TOL
) -> ProjectionBundle:
    """Monitors for orthogonal projections.

    Against the identity: P is isosceles orthogonal to I only for P = 0.
    For two projections: isosceles orthogonality is equivalent to a
    vanishing product, which then forces BJ orthogonality both ways.
    """
    _require_projection(p)
    n = p.rows
    is_identity = q.is_square and q.rows == n and float(
        np.max(np.abs(q.data - np.eye(n)))
    ) <= 1e-12
    if is_identity:
        iso = iso_check(NormedElement(p, operator_two()), NormedElement(q, operator_two()), tol)
        p_is_zero = operator_norm(p) <= tol.eq_tol
        if is_decisive(iso) and iso.holds != p_is_zero:
            raise TheoremViolation(
                "projection isosceles-orthogonal to the identity must be zero",
                evidence={"iso": iso.to_dict(), "norm_p": operator_norm(p)},
            )
        return ProjectionBundle(
            iso, product_norm=operator_norm(p), product_zero=p_is_zero,
            identity_branch=True,
        )
    _require_projection(q)
    if q.rows != n:
        raise NotProjection("projections live in different dimensions")
    prod = operator_norm(Matrix.of(p.data @ q.data))
    prod_zero = prod <= tol.eq_tol
    iso = iso_check(NormedElement(p, operator_two()), NormedElement(q, operator_two()), tol)
    if is_decisive(iso) and iso.holds != prod_zero:
        raise TheoremViolation(
            "projection isosceles orthogonality must match a zero product",
            evidence={"iso": iso.to_dict(), "product_norm": prod},
        )
    bj_pq = bj_qp = None
    if iso.holds:
        bj_pq, _ = bj_spectral(p, q, tol)
        bj_qp, _ = bj_spectral(q, p, tol)
        if not (bj_pq.holds and bj_qp.holds):
            raise TheoremViolation(
                "product-zero projections must be mutually BJ-orthogonal",
                evidence={"bj_pq": bj_pq.to_dict(), "bj_qp": bj_qp.to_dict()},
            )
    return ProjectionBundle(iso, prod, prod_zero, bj_pq, bj_qp)


# -- attainment-direction diagnostics ---------------------------------------


def iso_intersection_witness(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray | None:
    """Unit x0 in the shared attainment subspace of A+B and A-B with
    Re<Ax0, Bx0> = 0, when one exists.

    For real pairs whose attainment subspaces overlap (dimension count
    exceeding the ambient dimension guarantees this), such an x0 exists
    exactly when A and B are isosceles orthogonal.
    """
    h1, _ = _top_subspace(a + b, tol)
    h2, _ = _top_subspace(a - b, tol)
    common = intersect(h1, h2, tol)
    if common.dim == 0:
        return None
    g = common.basis
    form = _herm(b.data.conj().T @ a.data)
    comp = g.conj().T @ form @ g
    w, v = _kernels.eigh(comp)
    band = tol.eq_tol * operator_norm(a) * operator_norm(b)
    u = _mix_to_null(w, v, band)
    if u is None:
        return None
    x0 = g @ u
    return x0 / np.linalg.norm(x0)


def iso_intersection_witness_complex(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray] | None:
    """Complex-field variant: the real construction applied to (A, B) and
    to (A, iB), yielding the pair (h0, k0) or None."""
    h0 = iso_intersection_witness(a, b, tol)
    if h0 is None:
        return None
    k0 = iso_intersection_witness(a, b.scale(1j), tol)
    if k0 is None:
        return None
    return h0, k0


def iso_direction_signs(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> dict[str, list[float]]:
    """Re<Ah, Bh> at each extreme attainment direction of A+B and A-B.

    When the attainment subspaces are one-dimensional the lists are
    singletons and the values are canonical up to sign; in higher
    dimensions every basis choice is reported without a universal claim.
    """
    h1, _ = _top_subspace(a + b, tol)
    h2, _ = _top_subspace(a - b, tol)
    out: dict[str, list[float]] = {"plus": [], "minus": []}
    for key, basis in (("plus", h1), ("minus", h2)):
        for j in range(basis.dim):
            x = basis.basis[:, j]
            out[key].append(float(np.real(inner(a.data @ x, b.data @ x))))
    return out
