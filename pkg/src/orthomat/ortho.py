"""Norm-generic orthogonality deciders.

Each decider works through ``norms.norm_of`` alone, so the same code
serves the operator norm, Schatten-p norms and vector p-norms. Decisions
are three-valued with an explicit numeric margin: the defining relations
are exact equalities or suprema, so floating point forces a tolerance
band around the boundary. Reports carry the band and scale so callers
can tighten or loosen their reading of a result.

Sign convention for margins: negative values measure violation of the
relation (beyond the band = decisive failure); positive values, where a
relation admits interior evidence, measure decisive holding. Relations
defined by equalities hold *on* the boundary, so their "holds" outcomes
have margins at roundoff level inside the band.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (
    ComplexFieldUnsupported,
    NormMismatch,
    OrthomatError,
    PreconditionUnmet,
    ShapeMismatch,
    TheoremViolation,
)
from .linalg import DEFAULT_TOL, Field, Tolerances
from .norms import NormedElement, norm_of, norm_profile, shifted_norm

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# When set, every scalar minimization re-verifies convexity of the profile
# it exploits on 32 deterministic sample triples.
DEBUG_CONVEXITY = os.environ.get("ORTHOMAT_DEBUG", "") == "1"


class Relation(enum.Enum):
    BJ = "bj"
    ISO = "iso"
    ROBERTS = "roberts"
    R_ORTH = "r"
    SI = "si"
    X_PLUS = "x-plus"
    X_MINUS = "x-minus"


class Decision(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OrthReport:
    """Outcome of one orthogonality query."""

    relation: Relation
    decision: Decision
    margin: float
    scale: float
    band: float
    lambda_star: complex | float | None = None
    minimum: float | None = None
    witness: np.ndarray | None = None
    roots: tuple[float, ...] | None = None
    confidence: str | None = None
    trivial: bool = False
    note: str | None = None
    details: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.decision is Decision.HOLDS

    def to_dict(self) -> dict:
        lam = self.lambda_star
        if isinstance(lam, complex):
            lam = [lam.real, lam.imag]
        d = {
            "relation": self.relation.value,
            "decision": self.decision.value,
            "margin": self.margin,
            "scale": self.scale,
            "band": self.band,
        }
        if lam is not None:
            d["lambda_star"] = lam
        if self.minimum is not None:
            d["minimum"] = self.minimum
        if self.witness is not None:
            w = np.asarray(self.witness).reshape(-1)
            if np.iscomplexobj(w):
                d["witness"] = [[float(c.real), float(c.imag)] for c in w]
            else:
                d["witness"] = [float(c) for c in w]
        if self.roots is not None:
            d["roots"] = list(self.roots)
        if self.confidence is not None:
            d["confidence"] = self.confidence
        if self.trivial:
            d["trivial"] = True
        if self.note is not None:
            d["note"] = self.note
        if self.details:
            d["details"] = self.details
        return d


def is_decisive(report: OrthReport) -> bool:
    """Whether the margin is well clear of the tolerance boundary.

    Either the margin magnitude exceeds the band by a decade (clear
    failure, or clear interior holding), or the relation holds with a
    deviation at least a decade below the band (machine-level equality).
    """
    if report.decision is Decision.INCONCLUSIVE:
        return False
    if abs(report.margin) >= 10.0 * report.band:
        return True
    return report.decision is Decision.HOLDS and abs(report.margin) <= 0.1 * report.band


# -- scalar minimization --------------------------------------------------


def golden_min(f, lo: float, hi: float, tol_x: float) -> tuple[float, float]:
    """Golden-section minimum of a unimodal function on [lo, hi].

    Returns the best evaluated point, which for a convex profile is the
    global minimum of the interval up to tol_x.
    """
    a, b = lo, hi
    c = b - (b - a) * _INV_PHI
    d = a + (b - a) * _INV_PHI
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc <= fd else (d, fd)
    while (b - a) > tol_x:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_PHI
            fc = f(c)
            if fc < best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_PHI
            fd = f(d)
            if fd < best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def _assert_convex(f, lo: float, hi: float, scale: float) -> None:
    rng = np.random.default_rng(0x0C0FFEE)
    for _ in range(32):
        a, b = sorted(rng.uniform(lo, hi, size=2))
        mid = 0.5 * (a + b)
        if f(mid) > 0.5 * (f(a) + f(b)) + 1e-12 * max(scale, 1.0):
            raise OrthomatError("profile is not convex; minimization invalid")


def _min_real(f, lo: float, hi: float, tol_x: float, scale: float) -> tuple[float, float]:
    if DEBUG_CONVEXITY:
        _assert_convex(f, lo, hi, scale)
    x, fx = golden_min(f, lo, hi, tol_x)
    f0 = f(0.0) if lo <= 0.0 <= hi else math.inf
    if f0 < fx:
        x, fx = 0.0, f0
    return x, fx


def _min_complex(f, radius: float, tol_x: float, band: float, scale: float) -> tuple[complex, float]:
    """Coordinate descent over Re/Im with convex 1-D line searches.

    Alternations run at a coarse line-search tolerance until the iterate
    settles, then a final pair of searches polishes both coordinates at
    the full tolerance (this is what pins minima at kinks).
    """
    coarse = max(1e-6 * (1.0 + radius), tol_x)
    alpha, beta = 0.0, 0.0
    fbest = f(complex(alpha, beta))
    for _ in range(40):
        a_new, _ = _min_real(lambda t: f(complex(t, beta)), -radius, radius, coarse, scale)
        b_new, fb = _min_real(lambda t: f(complex(a_new, t)), -radius, radius, coarse, scale)
        step = math.hypot(a_new - alpha, b_new - beta)
        gain = fbest - fb
        alpha, beta, fbest = a_new, b_new, fb
        if step < coarse or gain < max(1e-3 * band, 1e-15 * max(scale, 1.0)):
            break
    alpha, _ = _min_real(lambda t: f(complex(t, beta)), -radius, radius, tol_x, scale)
    beta, fbest = _min_real(lambda t: f(complex(alpha, t)), -radius, radius, tol_x, scale)
    return complex(alpha, beta), fbest


# -- preliminaries ---------------------------------------------------------


def _check_pair(x: NormedElement, y: NormedElement) -> None:
    if x.value.data.shape != y.value.data.shape:
        raise ShapeMismatch("elements have different shapes")
    if x.norm != y.norm:
        raise NormMismatch("elements carry different norm descriptors")


def _pair_field(x: NormedElement, y: NormedElement) -> Field:
    if x.value.field is Field.COMPLEX or y.value.field is Field.COMPLEX:
        return Field.COMPLEX
    return Field.REAL


def _shifted(x: NormedElement, y: NormedElement):
    """f(lam) = ||x + lam*y|| as a callable."""
    return shifted_norm(x, y)


# -- deciders --------------------------------------------------------------


def bj_check(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """Birkhoff-James orthogonality: ||x + lam*y|| >= ||x|| for all scalars.

    The minimum of the convex profile f(lam) = ||x + lam*y|| is compared
    against f(0); by the reverse triangle inequality the minimizer lies in
    the disc |lam| <= 2||x||/||y||, which bounds the search.
    """
    _check_pair(x, y)
    nx, ny = norm_of(x), norm_of(y)
    if ny == 0.0 or nx == 0.0:
        return OrthReport(
            Relation.BJ, Decision.HOLDS, 0.0, nx, tol.eq_tol * nx,
            lambda_star=0.0, minimum=nx, trivial=True,
            note="trivial: zero operand",
        )
    radius = 2.0 * nx / ny
    f = _shifted(x, y)
    band = tol.eq_tol * nx
    tol_x = tol.search_tol * (1.0 + radius)
    if _pair_field(x, y) is Field.COMPLEX:
        lam, fmin = _min_complex(f, radius, tol_x, band, nx)
        on_edge = max(abs(lam.real), abs(lam.imag)) >= radius * (1.0 - 1e-9)
    else:
        lam, fmin = _min_real(f, -radius, radius, tol_x, nx)
        on_edge = abs(lam) >= radius * (1.0 - 1e-9)
    if on_edge and fmin < nx - band:
        raise OrthomatError("internal: minimizer escaped the reverse-triangle bound")
    fmin = min(fmin, nx)
    deficit = nx - fmin
    decision = Decision.HOLDS if deficit <= band else Decision.FAILS
    return OrthReport(
        Relation.BJ, decision, -deficit, nx, band,
        lambda_star=lam, minimum=fmin,
    )


def _one_sided(
    x: NormedElement, y: NormedElement, tol: Tolerances, relation: Relation,
    lo_sign: float, hi_sign: float,
) -> OrthReport:
    nx, ny = norm_of(x), norm_of(y)
    if ny == 0.0 or nx == 0.0:
        return OrthReport(
            relation, Decision.HOLDS, 0.0, nx, tol.eq_tol * nx,
            lambda_star=0.0, minimum=nx, trivial=True,
        )
    radius = 2.0 * nx / ny
    f = _shifted(x, y)
    tol_x = tol.search_tol * (1.0 + radius)
    lam, fmin = _min_real(f, lo_sign * radius, hi_sign * radius, tol_x, nx)
    fmin = min(fmin, nx)
    deficit = nx - fmin
    band = tol.eq_tol * nx
    decision = Decision.HOLDS if deficit <= band else Decision.FAILS
    return OrthReport(relation, decision, -deficit, nx, band, lambda_star=lam, minimum=fmin)


def xplus_xminus(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> tuple[OrthReport, OrthReport]:
    """Membership of y in x+ and in x- (one-sided norm growth).

    Both holding is exactly r-orthogonality; see ``r_orth_check``.
    Defined for the real field only.
    """
    _check_pair(x, y)
    if _pair_field(x, y) is Field.COMPLEX:
        raise ComplexFieldUnsupported("x+/x- membership is a real-space notion")
    plus = _one_sided(x, y, tol, Relation.X_PLUS, 0.0, 1.0)
    minus = _one_sided(x, y, tol, Relation.X_MINUS, -1.0, 0.0)
    return plus, minus


def r_orth_check(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """r-orthogonality: ||x + lam*y|| >= ||x|| for all real lam."""
    plus, minus = xplus_xminus(x, y, tol)
    worst = plus if plus.margin <= minus.margin else minus
    decision = (
        Decision.HOLDS if plus.holds and minus.holds else Decision.FAILS
    )
    return OrthReport(
        Relation.R_ORTH, decision, worst.margin, worst.scale, worst.band,
        lambda_star=worst.lambda_star, minimum=worst.minimum,
        trivial=plus.trivial and minus.trivial,
        details={"x_plus": plus.decision.value, "x_minus": minus.decision.value},
    )


def iso_check(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """Isosceles orthogonality: ||x+y|| = ||x-y|| (complex field adds
    ||x+iy|| = ||x-iy||)."""
    _check_pair(x, y)
    n_plus = norm_of(x.with_value(x.value + y.value))
    n_minus = norm_of(x.with_value(x.value - y.value))
    scale = max(n_plus, n_minus)
    band = tol.eq_tol * scale
    dev = abs(n_plus - n_minus)
    details = {"norm_plus": n_plus, "norm_minus": n_minus}
    if _pair_field(x, y) is Field.COMPLEX:
        n_iplus = norm_of(x.with_value(x.value + y.value.scale(1j)))
        n_iminus = norm_of(x.with_value(x.value - y.value.scale(1j)))
        dev = max(dev, abs(n_iplus - n_iminus))
        details.update({"norm_i_plus": n_iplus, "norm_i_minus": n_iminus})
    decision = Decision.HOLDS if dev <= band else Decision.FAILS
    return OrthReport(
        Relation.ISO, decision, -dev, scale, band,
        trivial=norm_of(y) == 0.0, details=details,
    )


def roberts_check(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """Roberts orthogonality: ||x + lam*y|| = ||x - lam*y|| for all scalars.

    Semi-decided on a deterministic grid of lam values; a Holds outcome
    carries confidence="grid". The symmetric difference d(lam) is even in
    lam, so evaluating each magnitude once covers both signs.
    """
    _check_pair(x, y)
    nx, ny = norm_of(x), norm_of(y)
    if ny == 0.0 or nx == 0.0:
        return OrthReport(
            Relation.ROBERTS, Decision.HOLDS, 0.0, nx, tol.eq_tol * nx,
            trivial=True, confidence="grid",
        )
    radius = 4.0 * nx / ny
    band = tol.eq_tol * (nx + radius * ny)
    if _pair_field(x, y) is Field.COMPLEX:
        mags = np.geomspace(1e-3 * radius, radius, 64)
        phases = np.exp(2j * np.pi * np.arange(64) / 64.0)
        probes = (mags[:, None] * phases[None, :]).reshape(-1)
    else:
        probes = np.geomspace(1e-3 * radius, radius, 512)
    d = np.abs(norm_profile(x, y, probes) - norm_profile(x, y, -probes))
    imax = int(np.argmax(d))
    worst_d = float(d[imax])
    worst_lam = complex(probes[imax]) if np.iscomplexobj(probes) else float(probes[imax])
    if worst_d <= band:
        return OrthReport(
            Relation.ROBERTS, Decision.HOLDS, -worst_d, nx + radius * ny, band,
            confidence="grid",
        )
    return OrthReport(
        Relation.ROBERTS, Decision.FAILS, -worst_d, nx + radius * ny, band,
        lambda_star=worst_lam,
    )


def si_check(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL,
    depth: int = 40,
) -> OrthReport:
    """Strong isosceles orthogonality.

    Requires isosceles orthogonality plus, on each dyadic interval
    [2^-k-1, 2^-k] (y normalized to unit norm), a scale t with
    ||x + t*y|| = ||x - t*y||, witnessing a positive sequence of isosceles
    scales converging to zero. Holds is a semi-decision at the stated depth.
    """
    _check_pair(x, y)
    if _pair_field(x, y) is Field.COMPLEX:
        raise ComplexFieldUnsupported("strong isosceles orthogonality is real-only")
    if depth < 1:
        raise ValueError("depth must be positive")
    iso = iso_check(x, y, tol)
    nx, ny = norm_of(x), norm_of(y)
    if ny == 0.0:
        return OrthReport(
            Relation.SI, Decision.HOLDS, iso.margin, iso.scale, iso.band,
            roots=(), trivial=True, confidence=f"depth={depth}",
        )
    if not iso.holds:
        return OrthReport(
            Relation.SI, Decision.FAILS, iso.margin, iso.scale, iso.band,
            note="isosceles stage failed", details=iso.details,
        )
    yhat = y.with_value(y.value.scale(1.0 / ny))
    fp = _shifted(x, yhat)

    def h(t: float) -> float:
        return fp(t) - fp(-t)

    band_h = tol.eq_tol * nx
    roots: list[float] = []
    hi = 1.0
    h_hi = h(hi)
    for _ in range(depth):
        lo = hi / 2.0
        h_lo = h(lo)
        root = _interval_root(h, lo, hi, h_lo, h_hi, band_h, tol.search_tol)
        if root is None:
            return OrthReport(
                Relation.SI, Decision.FAILS, -abs(h_lo), nx, band_h,
                note=f"no isosceles scale found in [{lo!r}, {hi!r}]",
                roots=tuple(roots),
            )
        roots.append(root)
        hi, h_hi = lo, h_lo
    return OrthReport(
        Relation.SI, Decision.HOLDS, iso.margin, iso.scale, iso.band,
        roots=tuple(roots), confidence=f"depth={depth}",
    )


def _interval_root(
    h, lo: float, hi: float, h_lo: float, h_hi: float, band: float, search_tol: float
) -> float | None:
    """Root of h on [lo, hi]: sign-change bisection, or the midpoint when
    |h| stays inside the band across the whole interval."""
    if abs(h_lo) <= band:
        return lo
    if abs(h_hi) <= band:
        return hi
    if (h_lo > 0.0) == (h_hi > 0.0):
        ts = np.linspace(lo, hi, 9)
        if all(abs(h(t)) <= band for t in ts[1:-1]):
            return 0.5 * (lo + hi)
        return None
    a, b, ha = lo, hi, h_lo
    while (b - a) > search_tol * b:
        mid = 0.5 * (a + b)
        hm = h(mid)
        if abs(hm) <= band:
            return mid
        if (hm > 0.0) == (ha > 0.0):
            a, ha = mid, hm
        else:
            b = mid
    return 0.5 * (a + b)


def bj_from_si(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL,
    depth: int = 40,
) -> OrthReport:
    """Theorem monitor: strong isosceles orthogonality forces r-orthogonality.

    Runs si_check as the gate, then returns the r-orthogonality report,
    which is guaranteed to hold; a decisive failure is raised as
    TheoremViolation because it can only mean an implementation bug.
    """
    si = si_check(x, y, tol, depth)
    if not si.holds:
        raise PreconditionUnmet("strong isosceles orthogonality does not hold")
    r = r_orth_check(x, y, tol)
    if r.decision is Decision.FAILS and is_decisive(r) and is_decisive(si):
        raise TheoremViolation(
            "SI held but r-orthogonality failed decisively",
            evidence={"si": si.to_dict(), "r": r.to_dict()},
        )
    return r


def iso_from_double_bj(
    x: NormedElement, y: NormedElement, tol: Tolerances = DEFAULT_TOL
) -> OrthReport:
    """Theorem monitor: (x+y) BJ-orthogonal to y and (x-y) BJ-orthogonal
    to y together force isosceles orthogonality of x and y."""
    _check_pair(x, y)
    h_plus = bj_check(x.with_value(x.value + y.value), y, tol)
    h_minus = bj_check(x.with_value(x.value - y.value), y, tol)
    if not (h_plus.holds and h_minus.holds):
        which = "(x+y)" if not h_plus.holds else "(x-y)"
        return OrthReport(
            Relation.ISO, Decision.INCONCLUSIVE, 0.0, h_plus.scale, h_plus.band,
            note=f"hypothesis {which} BJ-orthogonal to y fails",
            details={
                "hyp_plus_margin": h_plus.margin,
                "hyp_minus_margin": h_minus.margin,
            },
        )
    iso = iso_check(x, y, tol)
    if iso.decision is Decision.FAILS and is_decisive(iso):
        raise TheoremViolation(
            "both BJ hypotheses hold but isosceles orthogonality fails",
            evidence={
                "hyp_plus": h_plus.to_dict(),
                "hyp_minus": h_minus.to_dict(),
                "iso": iso.to_dict(),
            },
        )
    return iso
