"""Hilbert-space structure for the operator 2-norm.

Covers the norm attainment set, the quadratic-form zero set
O = {x on the sphere : <Tx, Ax> = 0}, the spectral characterization of
Birkhoff-James orthogonality (0 in the numerical range of the compressed
A*T), witness vectors, disjoint support, and the additive-closure
structure of the zero set.

Inner products are linear in the first argument and conjugate-linear in
the second, so <Tx, Ax> = x^H (A^H T) x.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    CriterionMismatch,
    NotUnit,
    PreconditionUnmet,
    ShapeMismatch,
    TheoremViolation,
    ZeroOperator,
)
from .linalg import (
    DEFAULT_TOL,
    Field,
    Matrix,
    SubspaceBasis,
    Tolerances,
    _top_subspace,
    operator_norm,
)
from .norms import NormedElement, operator_two
from .ortho import Decision, OrthReport, Relation, bj_check, is_decisive, iso_check, roberts_check

WITNESS_RTOL = 1e-7
ZERO_SET_RTOL = 1e-6
_NUMRANGE_ANGLES = 256
_DESCENT_STEPS = 200


def inner(u: np.ndarray, v: np.ndarray) -> complex:
    """<u, v>, linear in u."""
    return complex(np.vdot(np.asarray(v).reshape(-1), np.asarray(u).reshape(-1)))


class AttainmentKind(enum.Enum):
    WHOLE_SPHERE = "whole-sphere"
    SUBSPHERE = "subsphere"


@dataclass(frozen=True)
class AttainmentSet:
    """Unit vectors where the operator norm is attained.

    The zero operator attains everywhere (WHOLE_SPHERE); otherwise the set
    is the unit sphere of the top right-singular subspace. A fragile
    spectral cut (relative gap within a decade of gap_tol) is flagged.
    """

    kind: AttainmentKind
    subspace: SubspaceBasis | None = None
    ill_conditioned: bool = False


@dataclass(frozen=True)
class BJWitness:
    """Unit vector certifying T BJ-orthogonal to A via the attainment set."""

    vector: np.ndarray
    attainment_residual: float
    pairing_residual: float


def attainment_set(t: Matrix, tol: Tolerances = DEFAULT_TOL) -> AttainmentSet:
    if t.is_zero:
        return AttainmentSet(AttainmentKind.WHOLE_SPHERE)
    basis, ill = _top_subspace(t, tol)
    return AttainmentSet(AttainmentKind.SUBSPHERE, basis, ill)


def o_ta_member(
    t: Matrix, a: Matrix, x: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> bool:
    """Whether the unit vector x satisfies <Tx, Ax> = 0 within tolerance."""
    x = np.asarray(x).reshape(-1)
    if abs(np.linalg.norm(x) - 1.0) > 1e-10:
        raise NotUnit("x must be a unit vector")
    tx = t.data @ x
    ax = a.data @ x
    ntx = float(np.linalg.norm(tx))
    nax = float(np.linalg.norm(ax))
    if ntx == 0.0 or nax == 0.0:
        return True
    return abs(inner(tx, ax)) <= tol.eq_tol * ntx * nax


def _require_square_pair(t: Matrix, a: Matrix) -> None:
    if not (t.is_square and a.is_square and t.rows == a.rows):
        raise ShapeMismatch("expected square matrices of equal size")


def _compression(t: Matrix, a: Matrix, basis: SubspaceBasis) -> np.ndarray:
    k_full = a.data.conj().T @ t.data
    return basis.basis.conj().T @ k_full @ basis.basis


def _herm(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _mix_to_null(w: np.ndarray, v: np.ndarray, band: float) -> np.ndarray | None:
    """Unit vector annihilating the Hermitian form diag(w) in basis v.

    w is descending. Mixes the extreme eigenvectors when the form is
    indefinite; falls back to a near-null eigenvector when one end of the
    spectrum sits inside the band. None when the form is definite.
    """
    lam_max, lam_min = float(w[0]), float(w[-1])
    if lam_max > band and lam_min < -band:
        c = np.sqrt(-lam_min / (lam_max - lam_min))
        s = np.sqrt(lam_max / (lam_max - lam_min))
        return c * v[:, 0] + s * v[:, -1]
    if abs(lam_min) <= band:
        return v[:, -1].copy()
    if abs(lam_max) <= band:
        return v[:, 0].copy()
    return None


def _descend_to_zero(k: np.ndarray, x: np.ndarray, steps: int = _DESCENT_STEPS) -> np.ndarray:
    """Projected descent on |x^H K x| over the unit sphere."""
    x = x / np.linalg.norm(x)
    kh = k.conj().T
    scale = max(float(np.max(np.abs(k))), 1e-300)
    eta = 0.5 / scale
    q = complex(x.conj() @ (k @ x))
    for _ in range(steps):
        if abs(q) == 0.0:
            break
        grad = np.conj(q) * (k @ x) + q * (kh @ x)
        grad = grad - (x.conj() @ grad) * x
        gn = float(np.linalg.norm(grad))
        if gn < 1e-18 * scale:
            break
        step = eta
        improved = False
        for _ in range(30):
            cand = x - step * grad
            cand = cand / np.linalg.norm(cand)
            qc = complex(cand.conj() @ (k @ cand))
            if abs(qc) < abs(q):
                x, q = cand, qc
                improved = True
                break
            step *= 0.5
        if not improved:
            break
    return x


def _numerical_range_margin(k: np.ndarray) -> float:
    """max over directions of lambda_min(Re(e^{i theta} K)).

    Zero lies in the numerical range of K exactly when this is <= 0; the
    convexity of the range makes the angular sweep sufficient. Sizes 1 and
    2 use the closed-form minimum eigenvalue, vectorized over the sweep.
    """
    phases = np.exp(2j * np.pi * np.arange(_NUMRANGE_ANGLES) / _NUMRANGE_ANGLES)
    n = k.shape[0]
    if n == 1:
        return float(np.max(np.real(phases * k[0, 0])))
    if n == 2:
        # lambda_min of [[a, b], [conj(b), d]] = (a+d)/2 - sqrt(((a-d)/2)^2 + |b|^2)
        a = np.real(phases * k[0, 0])
        d = np.real(phases * k[1, 1])
        b = 0.5 * (phases * k[0, 1] + np.conj(phases * k[1, 0]))
        mu = 0.5 * (a + d) - np.sqrt(0.25 * (a - d) ** 2 + np.abs(b) ** 2)
        return float(np.max(mu))
    worst = -np.inf
    for phase in phases:
        h = _herm(phase * k)
        mu = float(_kernels.eigvals_herm(h)[-1])
        if mu > worst:
            worst = mu
    return worst


def _validated_witness(
    t: Matrix, a: Matrix, x: np.ndarray
) -> BJWitness | None:
    x = np.asarray(x).reshape(-1)
    nrm = float(np.linalg.norm(x))
    if nrm == 0.0:
        return None
    x = x / nrm
    nt = operator_norm(t)
    na = operator_norm(a)
    att = abs(float(np.linalg.norm(t.data @ x)) - nt)
    pair = abs(inner(t.data @ x, a.data @ x))
    if att <= WITNESS_RTOL * nt and pair <= WITNESS_RTOL * nt * max(na, 1e-300):
        return BJWitness(x, att, pair)
    return None


def bj_spectral(
    t: Matrix, a: Matrix, tol: Tolerances = DEFAULT_TOL
) -> tuple[OrthReport, BJWitness | None]:
    """Spectral Birkhoff-James criterion for the operator norm.

    T is BJ-orthogonal to A exactly when the compression of A*T to the
    norm attainment subspace of T takes the value 0 on the unit sphere:
    for the real field, 0 lies between the extreme eigenvalues of the
    symmetric part; for the complex field, 0 lies in the numerical range,
    tested by an angular sweep. The margin is the depth of 0 inside the
    relevant range (negative when outside).
    """
    _require_square_pair(t, a)
    if t.is_zero:
        raise ZeroOperator("attainment subspace undefined for the zero operator")
    basis, ill = _top_subspace(t, tol)
    k = _compression(t, a, basis)
    scale = operator_norm(t) * operator_norm(a)
    band = tol.eq_tol * scale
    note = "ill-conditioned attainment set" if ill else None

    if t.field is Field.REAL and a.field is Field.REAL:
        w, v = _kernels.eigh(_herm(k))
        margin = float(min(w[0], -w[-1]))
        holds = w[-1] <= band and w[0] >= -band
        witness = None
        if holds:
            u = _mix_to_null(w, v, band)
            if u is not None:
                witness = _validated_witness(t, a, basis.basis @ u)
        report = OrthReport(
            Relation.BJ,
            Decision.HOLDS if holds else Decision.FAILS,
            margin, scale, band,
            witness=witness.vector if witness else None,
            confidence="spectral", note=note,
        )
        return report, witness

    g = _numerical_range_margin(k)
    margin = -g
    holds = g <= band
    witness = None
    if holds:
        hk = _herm(k)
        w, v = _kernels.eigh(hk)
        seed = _mix_to_null(w, v, band)
        if seed is None:
            seed = v[:, -1]
        u = _descend_to_zero(k, seed)
        witness = _validated_witness(t, a, basis.basis @ u)
    report = OrthReport(
        Relation.BJ,
        Decision.HOLDS if holds else Decision.FAILS,
        margin, scale, band,
        witness=witness.vector if witness else None,
        confidence="spectral", note=note,
    )
    return report, witness


@dataclass(frozen=True)
class CrosscheckReport:
    """Joint outcome of the spectral criterion and direct minimization."""

    spectral: OrthReport
    minimization: OrthReport

    @property
    def agree(self) -> bool:
        return self.spectral.decision is self.minimization.decision

    @property
    def decisive(self) -> bool:
        return is_decisive(self.spectral) and is_decisive(self.minimization)


def bj_crosscheck(
    t: Matrix, a: Matrix, tol: Tolerances = DEFAULT_TOL
) -> CrosscheckReport:
    """Run the spectral criterion against the norm-minimization decider.

    A decisive disagreement raises CriterionMismatch: the two routes are
    theorem-equivalent in finite dimensions, so disagreement means a bug.
    """
    spectral, _ = bj_spectral(t, a, tol)
    element_t = NormedElement(t, operator_two())
    element_a = NormedElement(a, operator_two())
    mini = bj_check(element_t, element_a, tol)
    rpt = CrosscheckReport(spectral, mini)
    if rpt.decisive and not rpt.agree:
        raise CriterionMismatch(
            "spectral criterion and minimization disagree decisively",
            margins={
                "spectral": spectral.margin,
                "minimization": mini.margin,
                "band": spectral.band,
            },
        )
    return rpt


def disjoint_support(a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    """AB* = B*A = 0 within the relative band (zero operators qualify)."""
    _require_square_pair(a, b)
    scale = operator_norm(a) * operator_norm(b)
    if scale == 0.0:
        return True
    bound = tol.eq_tol * scale
    return (
        operator_norm(Matrix.of(a.data @ b.data.conj().T)) <= bound
        and operator_norm(Matrix.of(b.data.conj().T @ a.data)) <= bound
    )


@dataclass(frozen=True)
class DisjointSupportBundle:
    bj_ab: OrthReport
    bj_ba: OrthReport
    roberts: OrthReport
    iso: OrthReport

    @property
    def all_hold(self) -> bool:
        return all(
            r.decision is Decision.HOLDS
            for r in (self.bj_ab, self.bj_ba, self.roberts, self.iso)
        )


def disjoint_support_consequences(
    a: Matrix, b: Matrix, tol: Tolerances = DEFAULT_TOL
) -> DisjointSupportBundle:
    """With B*A = 0: A and B are mutually BJ-orthogonal, Roberts orthogonal
    and hence isosceles orthogonal. Any decisive failure is raised."""
    _require_square_pair(a, b)
    scale = operator_norm(a) * operator_norm(b)
    if scale > 0.0:
        cross = operator_norm(Matrix.of(b.data.conj().T @ a.data))
        if cross > tol.eq_tol * scale:
            raise PreconditionUnmet("B*A is not zero within tolerance")
    ea = NormedElement(a, operator_two())
    eb = NormedElement(b, operator_two())
    bundle = DisjointSupportBundle(
        bj_ab=bj_check(ea, eb, tol),
        bj_ba=bj_check(eb, ea, tol),
        roberts=roberts_check(ea, eb, tol),
        iso=iso_check(ea, eb, tol),
    )
    for name, rpt in (
        ("A bj B", bundle.bj_ab),
        ("B bj A", bundle.bj_ba),
        ("A roberts B", bundle.roberts),
        ("A iso B", bundle.iso),
    ):
        if rpt.decision is Decision.FAILS and is_decisive(rpt):
            raise TheoremViolation(
                f"disjoint support but {name} fails decisively",
                evidence={"relation": name, "report": rpt.to_dict()},
            )
    return bundle


# -- zero-set sampling -----------------------------------------------------


def _is_projection(p: Matrix, atol: float = 1e-9) -> bool:
    d = p.data
    if not p.is_square:
        return False
    if float(np.max(np.abs(d - d.conj().T))) > atol:
        return False
    return operator_norm(Matrix.of(d @ d - d)) <= atol


def _nested_projections(t: Matrix, a: Matrix) -> bool:
    """Strictly nested orthogonal projections (product equals the smaller)."""
    if not (_is_projection(t) and _is_projection(a)):
        return False
    if float(np.max(np.abs(t.data - a.data))) <= 1e-9:
        return False
    pq = t.data @ a.data
    qp = a.data @ t.data
    for small in (a.data, t.data):
        if (
            float(np.max(np.abs(pq - small))) <= 1e-9
            and float(np.max(np.abs(qp - small))) <= 1e-9
        ):
            return True
    return False


def _unit_combo(v: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Random unit vector in the span of the columns of v."""
    k = v.shape[1]
    c = rng.standard_normal(k)
    if np.iscomplexobj(v):
        c = c + 1j * rng.standard_normal(k)
    c = c / np.linalg.norm(c)
    return v @ c


class _ZeroSetSampler:
    """Draws unit vectors from {x : x^H S x = 0} for Hermitian S.

    Splits the spectrum into positive / null / negative parts and mixes a
    random positive-space vector with a random negative-space vector at
    the angle that cancels the form exactly; null-space directions are
    zero-set members on their own. Rejection sampling would never
    terminate on this measure-zero set.
    """

    def __init__(self, s: np.ndarray, band: float):
        w, v = _kernels.eigh(s)
        top = float(np.max(np.abs(w))) if w.size else 0.0
        thr = max(band, 1e-13 * top)
        self.pos = v[:, w > thr]
        self.neg = v[:, w < -thr]
        self.null = v[:, np.abs(w) <= thr]
        self.s = s
        self.degenerate = (
            self.null.shape[1] == 0
            and (self.pos.shape[1] == 0 or self.neg.shape[1] == 0)
        )

    def draw(self, rng: np.random.Generator) -> np.ndarray:
        if self.degenerate:
            raise ValueError("zero set is empty")
        has_mix = self.pos.shape[1] > 0 and self.neg.shape[1] > 0
        has_null = self.null.shape[1] > 0
        if has_mix and (not has_null or rng.uniform() < 0.7):
            up = _unit_combo(self.pos, rng)
            un = _unit_combo(self.neg, rng)
            alpha = float(np.real(up.conj() @ (self.s @ up)))
            beta = float(np.real(un.conj() @ (self.s @ un)))
            c = np.sqrt(-beta / (alpha - beta))
            s_ = np.sqrt(alpha / (alpha - beta))
            return c * up + s_ * un
        return _unit_combo(self.null, rng)


def _zero_set_sampler(
    t: Matrix, a: Matrix, tol: Tolerances
) -> tuple[_ZeroSetSampler, np.ndarray, float]:
    k_full = a.data.conj().T @ t.data
    scale = operator_norm(t) * operator_norm(a)
    sampler = _ZeroSetSampler(_herm(k_full), tol.eq_tol * scale)
    return sampler, k_full, scale


def _draw_zero_vector(
    sampler: _ZeroSetSampler, k_full: np.ndarray, scale: float,
    rng: np.random.Generator, complex_field: bool,
) -> np.ndarray:
    """One zero-set member; for the complex field the mixing only cancels
    the real part, so a short descent removes the imaginary remainder."""
    for _ in range(16):
        x = sampler.draw(rng)
        if complex_field:
            x = _descend_to_zero(k_full, x)
        q = abs(complex(x.conj() @ (k_full @ x)))
        if q <= 1e-10 * max(scale, 1e-300):
            return x
    return x


class GammaOutcome(enum.Enum):
    MEMBER_EVIDENCE = "member-evidence"
    COUNTEREXAMPLE = "counterexample"
    NO_COUNTEREXAMPLE = "no-counterexample-found"


@dataclass(frozen=True)
class GammaReport:
    outcome: GammaOutcome
    reason: str | None = None
    x1: np.ndarray | None = None
    x2: np.ndarray | None = None
    value: complex | None = None
    samples: int = 0


def gamma_test(
    t: Matrix, a: Matrix, samples: int = 64, seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
) -> GammaReport:
    """Probe the bilinear closure condition of the zero set.

    The pair belongs to the closure class when <Tx1, Ax2> + <Tx2, Ax1> = 0
    for all x1, x2 with <Txi, Axi> = 0. Structural sufficient conditions
    (disjoint support, nested projections, empty zero set) certify
    membership; otherwise sampled pairs can only refute it, and a clean
    run is reported as no-counterexample-found, not membership.
    """
    _require_square_pair(t, a)
    if disjoint_support(t, a, tol):
        return GammaReport(GammaOutcome.MEMBER_EVIDENCE, reason="disjoint support")
    if _nested_projections(t, a):
        return GammaReport(GammaOutcome.MEMBER_EVIDENCE, reason="nested projections")
    sampler, k_full, scale = _zero_set_sampler(t, a, tol)
    if sampler.degenerate:
        return GammaReport(
            GammaOutcome.MEMBER_EVIDENCE,
            reason="definite form: zero set is empty, membership is vacuous",
        )
    rng = np.random.default_rng(seed)
    complex_field = t.field is Field.COMPLEX or a.field is Field.COMPLEX
    threshold = ZERO_SET_RTOL * max(scale, 1e-300)
    for _ in range(samples):
        x1 = _draw_zero_vector(sampler, k_full, scale, rng, complex_field)
        x2 = _draw_zero_vector(sampler, k_full, scale, rng, complex_field)
        value = complex(x2.conj() @ (k_full @ x1)) + complex(x1.conj() @ (k_full @ x2))
        if abs(value) > threshold:
            return GammaReport(
                GammaOutcome.COUNTEREXAMPLE, x1=x1, x2=x2, value=value,
                samples=samples,
            )
    return GammaReport(GammaOutcome.NO_COUNTEREXAMPLE, samples=samples)


class ProbeOutcome(enum.Enum):
    CLOSED = "closed-under-addition"
    VIOLATION = "violation"


@dataclass(frozen=True)
class ProbeReport:
    outcome: ProbeOutcome
    reason: str | None = None
    x1: np.ndarray | None = None
    x2: np.ndarray | None = None
    value: complex | None = None
    samples: int = 0


def o_ta_subspace_probe(
    t: Matrix, a: Matrix, samples: int = 64, seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
) -> ProbeReport:
    """Check additive closure of the zero set on sampled pairs.

    A violation (x1 + x2 leaving the zero set) witnesses that the set is
    not the unit sphere of a subspace; it is expected exactly when
    gamma_test finds a counterexample.
    """
    _require_square_pair(t, a)
    sampler, k_full, scale = _zero_set_sampler(t, a, tol)
    if sampler.degenerate:
        return ProbeReport(ProbeOutcome.CLOSED, reason="zero set is empty")
    rng = np.random.default_rng(seed)
    complex_field = t.field is Field.COMPLEX or a.field is Field.COMPLEX
    threshold = ZERO_SET_RTOL * max(scale, 1e-300)
    checked = 0
    for _ in range(samples):
        x1 = _draw_zero_vector(sampler, k_full, scale, rng, complex_field)
        x2 = _draw_zero_vector(sampler, k_full, scale, rng, complex_field)
        v = x1 + x2
        nv = float(np.linalg.norm(v))
        if nv < 1e-8:
            continue
        v = v / nv
        checked += 1
        q = complex(v.conj() @ (k_full @ v))
        if abs(q) > threshold:
            return ProbeReport(
                ProbeOutcome.VIOLATION, x1=x1, x2=x2, value=q, samples=checked,
            )
    return ProbeReport(ProbeOutcome.CLOSED, samples=checked)
