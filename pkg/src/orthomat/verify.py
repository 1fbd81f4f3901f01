"""Randomized theorem suites, instance generators, and exact reproduction
of the worked diagonal examples.

Every suite executes one guaranteed implication over generated instances;
a violation in any trial fails the suite and is recorded with the
serialized inputs needed to replay it. Margin-band (non-decisive) trials
are counted as inconclusive and never fail a suite: the underlying
statements are exact, and the band is a numerical artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BadKind, BadSuite, CriterionMismatch, TheoremViolation
from .linalg import DEFAULT_TOL, Field, Matrix, Tolerances, operator_norm
from .norms import NormedElement, operator_two, schatten, vector_p
from .ortho import (
    Decision,
    bj_check,
    bj_from_si,
    is_decisive,
    iso_check,
    iso_from_double_bj,
    roberts_check,
    si_check,
)
from .hilbert import (
    GammaOutcome,
    ProbeOutcome,
    bj_crosscheck,
    bj_spectral,
    disjoint_support,
    disjoint_support_consequences,
    gamma_test,
    o_ta_member,
    o_ta_subspace_probe,
)
from .positive import (
    invertible_pair_impossibility,
    kittaneh_bounds,
    positive_iso_check,
    positive_iso_witness,
    projection_propositions,
)
from . import serialize

GENERATOR_KINDS = (
    "dense",
    "psd",
    "positive-definite",
    "projection",
    "nested-projections",
    "disjoint-support-pair",
    "bj-orthogonal-pair",
    "thm34-truncation",
)


# -- random primitives -------------------------------------------------------


def _gauss(rng: np.random.Generator, rows: int, cols: int, field: Field) -> np.ndarray:
    g = rng.standard_normal((rows, cols))
    if field is Field.COMPLEX:
        g = (g + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)
    return g


def _unitary(rng: np.random.Generator, dim: int, field: Field) -> np.ndarray:
    q, r = np.linalg.qr(_gauss(rng, dim, dim, field))
    d = np.diagonal(r)
    phase = d / np.abs(d)
    return q * phase.conj()


def _unit_vector(rng: np.random.Generator, dim: int, field: Field) -> np.ndarray:
    v = _gauss(rng, dim, 1, field).reshape(-1)
    return v / np.linalg.norm(v)


def thm34_truncation(n: int) -> tuple[Matrix, Matrix]:
    """Diagonal truncations T = diag(1/2, 1/2, 2/3, ..., (n-1)/n) and
    A = diag(1, 1/2, ..., 1/n)."""
    if n < 2:
        raise BadKind("truncation size must be at least 2")
    t = np.array([0.5] + [(k - 1.0) / k for k in range(2, n + 1)])
    a = np.array([1.0 / k for k in range(1, n + 1)])
    return Matrix.real(np.diag(t)), Matrix.real(np.diag(a))


def nested_projections(dim: int) -> tuple[Matrix, Matrix]:
    """Coordinate-aligned strictly nested projections (rank dim-1, dim-2)."""
    if dim < 3:
        raise BadKind("nested projections need dimension >= 3")
    big = np.diag([1.0] * (dim - 1) + [0.0])
    small = np.diag([1.0] * (dim - 2) + [0.0, 0.0])
    return Matrix.real(big), Matrix.real(small)


def _planted_bj_pair(
    rng: np.random.Generator, dim: int, field: Field
) -> tuple[Matrix, Matrix]:
    """(T, A) with a planted witness: a unit x0 spanning the attainment set
    of T (simple top singular value) and <Tx0, Ax0> = 0."""
    x0 = _unit_vector(rng, dim, field)
    g = _gauss(rng, dim, dim, field)
    g[:, 0] = x0
    v, _ = np.linalg.qr(g)
    v[:, 0] = x0
    sv = np.concatenate(([1.5 + rng.uniform()], rng.uniform(0.2, 0.8, dim - 1)))
    u = _unitary(rng, dim, field)
    t = (u * sv) @ v.conj().T
    a0 = _gauss(rng, dim, dim, field)
    tx0 = t @ x0
    gamma = np.vdot(tx0, a0 @ x0) / np.vdot(tx0, tx0)
    a = a0 - gamma * np.outer(tx0, x0.conj())
    return Matrix(t, field), Matrix(a, field)


def generators(kind: str, dim: int, field: Field, seed) -> Matrix | tuple[Matrix, Matrix]:
    """Deterministic structured instances, one kind per suite hypothesis.

    ``seed`` may be an integer, a sequence of integers, or an existing
    numpy Generator (consumed in place).
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if kind == "dense":
        return Matrix(_gauss(rng, dim, dim, field), field)
    if kind == "psd":
        g = _gauss(rng, dim, dim, field)
        return Matrix(g.conj().T @ g, field)
    if kind == "positive-definite":
        g = _gauss(rng, dim, dim, field)
        h = g.conj().T @ g
        h = h + 0.1 * operator_norm(Matrix(h, field)) * np.eye(dim)
        return Matrix(h, field)
    if kind == "projection":
        rank = int(rng.integers(1, dim))
        q = _unitary(rng, dim, field)[:, :rank]
        p = q @ q.conj().T
        return Matrix(0.5 * (p + p.conj().T), field)
    if kind == "nested-projections":
        return nested_projections(dim)
    if kind == "disjoint-support-pair":
        split = int(rng.integers(1, dim))
        a = np.zeros((dim, dim), dtype=complex if field is Field.COMPLEX else float)
        b = a.copy()
        a[:split, :split] = _gauss(rng, split, split, field)
        b[split:, split:] = _gauss(rng, dim - split, dim - split, field)
        u = _unitary(rng, dim, field)
        return (
            Matrix(u @ a @ u.conj().T, field),
            Matrix(u @ b @ u.conj().T, field),
        )
    if kind == "bj-orthogonal-pair":
        return _planted_bj_pair(rng, dim, field)
    if kind == "thm34-truncation":
        return thm34_truncation(dim)
    raise BadKind(f"unknown generator kind {kind!r}")


# -- suite machinery ---------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    trials: int
    dims: tuple[int, ...] = (2, 3, 4, 5, 6)
    field: str = "both"  # "real" | "complex" | "both"
    seed: int = 0
    tolerances: Tolerances = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not self.dims or any(d < 2 or d > 64 for d in self.dims):
            raise ValueError("dims must be nonempty with entries in [2, 64]")
        if self.field not in ("real", "complex", "both"):
            raise ValueError("field must be real, complex or both")

    def fields(self) -> tuple[Field, ...]:
        if self.field == "real":
            return (Field.REAL,)
        if self.field == "complex":
            return (Field.COMPLEX,)
        return (Field.REAL, Field.COMPLEX)


@dataclass
class SuiteResult:
    suite: str
    trials: int
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    failures: list = dc_field(default_factory=list)

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return serialize.dumps(self.to_obj())


def _pair_obj(pair) -> dict:
    a, b = pair
    if isinstance(a, NormedElement):
        return {
            "left": serialize.element_to_obj(a),
            "right": serialize.element_to_obj(b),
        }
    return {"left": serialize.matrix_to_obj(a), "right": serialize.matrix_to_obj(b)}


def _op_elements(a: Matrix, b: Matrix) -> tuple[NormedElement, NormedElement]:
    return NormedElement(a, operator_two()), NormedElement(b, operator_two())


# Each suite is a (generate, check) pair: generate consumes the trial rng
# and returns the instance; check raises TheoremViolation/CriterionMismatch
# on a violated implication and otherwise reports "pass" or "inconclusive".


def _gen_dense_pair(rng, dim, field, i):
    return (
        generators("dense", dim, field, rng),
        generators("dense", dim, field, rng),
    )


def _check_bhatia_semrl(pair, tol):
    rpt = bj_crosscheck(pair[0], pair[1], tol)
    return "pass" if rpt.decisive else "inconclusive"


def _gen_disjoint(rng, dim, field, i):
    return generators("disjoint-support-pair", dim, field, rng)


def _check_prop41(pair, tol):
    bundle = disjoint_support_consequences(pair[0], pair[1], tol)
    decisive = all(
        is_decisive(r) for r in (bundle.bj_ab, bundle.bj_ba, bundle.roberts, bundle.iso)
    )
    return "pass" if decisive else "inconclusive"


def _gen_psd_pair(rng, dim, field, i):
    return (
        generators("psd", dim, field, rng),
        generators("psd", dim, field, rng),
    )


def _check_kittaneh(pair, tol):
    kittaneh_bounds(pair[0], pair[1], tol)
    return "pass"


def _check_iso_max(pair, tol):
    rpt = positive_iso_check(pair[0], pair[1], tol)
    positive_iso_witness(pair[0], pair[1], tol)
    return "pass" if is_decisive(rpt) else "inconclusive"


def _gen_cariso(rng, dim, field, i):
    if i % 2 == 0:
        return _gen_psd_pair(rng, dim, field, i)
    # disjoint PSD pair: covers the witness-exists branch
    x, y = generators("disjoint-support-pair", dim, field, rng)
    return (
        Matrix.of(x.data.conj().T @ x.data),
        Matrix.of(y.data.conj().T @ y.data),
    )


def _check_cariso(pair, tol):
    a, b = pair
    witness = positive_iso_witness(a, b, tol)
    rpt = positive_iso_check(a, b, tol)
    if witness is not None:
        mx = max(operator_norm(a), operator_norm(b))
        reach = max(
            float(np.linalg.norm(a.data @ witness)),
            float(np.linalg.norm(b.data @ witness)),
        )
        if abs(reach - mx) > 1e-6 * mx:
            raise TheoremViolation(
                "witness does not attain the larger operator norm",
                evidence={"gap": abs(reach - mx)},
            )
    return "pass" if is_decisive(rpt) else "inconclusive"


def _gen_projection_pair(rng, dim, field, i):
    return (
        generators("projection", dim, field, rng),
        generators("projection", dim, field, rng),
    )


def _check_projections(pair, tol):
    bundle = projection_propositions(pair[0], pair[1], tol)
    return "pass" if is_decisive(bundle.iso) else "inconclusive"


def _gen_pd_pair(rng, dim, field, i):
    return (
        generators("positive-definite", dim, field, rng),
        generators("positive-definite", dim, field, rng),
    )


def _check_invertible(pair, tol):
    bundle = invertible_pair_impossibility(pair[0], pair[1], tol)
    if not bundle.both_fail:
        return "inconclusive"
    decisive = is_decisive(bundle.iso) and is_decisive(bundle.bj)
    return "pass" if decisive else "inconclusive"


def _prop51_instance(rng, dim: int, field: Field, style: int):
    """Pairs genuinely satisfying both BJ hypotheses of the implication
    "(x+y) and (x-y) BJ-orthogonal to y force x isosceles-orthogonal to y".

    Style 0: dominant-block pair under the operator norm (the profile is
    pinned by the larger block). Style 1: sign-balanced diagonal pair
    under the trace norm (zero subgradient on both sides). Style 2: the
    same balance for the entrywise 1-norm on vectors. Style 3: dominant
    coordinate under a high-p vector norm.
    """
    if style == 0:
        split = max(1, dim // 2)
        x = np.zeros((dim, dim), dtype=complex if field is Field.COMPLEX else float)
        y = x.copy()
        x1 = _gauss(rng, split, split, field)
        x2 = _gauss(rng, dim - split, dim - split, field)
        y2 = _gauss(rng, dim - split, dim - split, field)
        floor = operator_norm(Matrix.of(x2)) + 2.0 * operator_norm(Matrix.of(y2))
        x1 *= (floor + 1.0 + rng.uniform()) / max(operator_norm(Matrix.of(x1)), 1e-12)
        x[:split, :split] = x1
        x[split:, split:] = x2
        y[split:, split:] = y2
        u = _unitary(rng, dim, field)
        mx = Matrix(u @ x @ u.conj().T, field)
        my = Matrix(u @ y @ u.conj().T, field)
        return NormedElement(mx, operator_two()), NormedElement(my, operator_two())
    if style == 1:
        c = rng.uniform(0.5, 1.0)
        eta = np.zeros(dim)
        eta[0], eta[1] = c, -c
        xi = rng.uniform(c + 0.5, c + 2.0, dim)
        u = _unitary(rng, dim, Field.REAL)
        mx = Matrix.real(u @ np.diag(xi) @ u.T)
        my = Matrix.real(u @ np.diag(eta) @ u.T)
        return NormedElement(mx, schatten(1.0)), NormedElement(my, schatten(1.0))
    if style == 2:
        c = rng.uniform(0.5, 1.0)
        y = np.zeros(dim)
        y[0], y[1] = c, -c
        x = rng.uniform(c + 0.5, c + 2.0, dim)
        return (
            NormedElement(Matrix.real(x.reshape(-1, 1)), vector_p(1.0)),
            NormedElement(Matrix.real(y.reshape(-1, 1)), vector_p(1.0)),
        )
    x = np.zeros(dim)
    y = np.zeros(dim)
    x[0] = 4.0 + rng.uniform()
    y[1:] = rng.uniform(-0.5, 0.5, dim - 1)
    return (
        NormedElement(Matrix.real(x.reshape(-1, 1)), vector_p(64.0)),
        NormedElement(Matrix.real(y.reshape(-1, 1)), vector_p(64.0)),
    )


def _gen_prop51(rng, dim, field, i):
    return _prop51_instance(rng, dim, field, i % 4)


def _check_prop51(pair, tol):
    rpt = iso_from_double_bj(pair[0], pair[1], tol)
    return "inconclusive" if rpt.decision is Decision.INCONCLUSIVE else "pass"


def _gen_si_bj(rng, dim, field, i):
    if i % 2 == 0:
        a, b = generators("disjoint-support-pair", dim, Field.REAL, rng)
        return _op_elements(a, b)
    return _prop51_instance(rng, dim, Field.REAL, 1)


def _check_si_bj(pair, tol):
    si = si_check(pair[0], pair[1], tol)
    if not si.holds:
        return "inconclusive"
    bj_from_si(pair[0], pair[1], tol)
    return "pass"


def _gen_planted_real(rng, dim, field, i):
    return generators("bj-orthogonal-pair", dim, Field.REAL, rng)


def _gen_planted(rng, dim, field, i):
    return generators("bj-orthogonal-pair", dim, field, rng)


def _check_thm33(pair, tol):
    rpt, witness = bj_spectral(pair[0], pair[1], tol)
    if not rpt.holds or witness is None:
        raise TheoremViolation(
            "planted BJ-orthogonal pair has no attainment witness",
            evidence={"report": rpt.to_dict()},
        )
    return "pass"


def _check_thm35(pair, tol):
    rpt, witness = bj_spectral(pair[0], pair[1], tol)
    if not rpt.holds or witness is None:
        raise TheoremViolation(
            "planted BJ-orthogonal pair has no attainment witness",
            evidence={"report": rpt.to_dict()},
        )
    if not o_ta_member(pair[0], pair[1], witness.vector, tol):
        raise TheoremViolation(
            "emitted witness is not in the zero set",
            evidence={"pairing": witness.pairing_residual},
        )
    return "pass"


def _gen_gamma(rng, dim, field, i):
    style = i % 3
    if style == 0 and dim >= 3:
        big, small = nested_projections(dim)
        u = _unitary(rng, dim, field)
        t = Matrix(u @ big.data @ u.conj().T, field)
        a = Matrix(u @ small.data @ u.conj().T, field)
    elif style == 1:
        t, a = generators("disjoint-support-pair", dim, field, rng)
    else:
        t = generators("dense", dim, field, rng)
        a = generators("dense", dim, field, rng)
    sample_seed = int(rng.integers(0, 2**62))
    return t, a, sample_seed


def _check_gamma(instance, tol):
    t, a, sample_seed = instance
    gamma = gamma_test(t, a, samples=32, seed=sample_seed, tol=tol)
    probe = o_ta_subspace_probe(t, a, samples=32, seed=sample_seed, tol=tol)
    scale = max(operator_norm(t) * operator_norm(a), 1e-300)
    if gamma.outcome is GammaOutcome.MEMBER_EVIDENCE:
        if probe.outcome is not ProbeOutcome.CLOSED:
            raise TheoremViolation(
                "membership evidence but the zero set is not additively closed",
                evidence={"reason": gamma.reason, "probe": str(probe.value)},
            )
        return "pass"
    if gamma.outcome is GammaOutcome.COUNTEREXAMPLE:
        v = gamma.x1 + gamma.x2
        nv = float(np.linalg.norm(v))
        if nv > 1e-8:
            k_full = a.data.conj().T @ t.data
            vn = v / nv
            q = abs(complex(vn.conj() @ (k_full @ vn)))
            if q <= 1e-12 * scale:
                raise TheoremViolation(
                    "bilinear counterexample whose sum stays in the zero set",
                    evidence={"bilinear": abs(gamma.value), "q_sum": q},
                )
        if abs(gamma.value) > 4e-6 * scale and probe.outcome is not ProbeOutcome.VIOLATION:
            raise TheoremViolation(
                "decisive counterexample but the closure probe saw none",
                evidence={"bilinear": abs(gamma.value)},
            )
    return "pass"


def _ser_gamma(instance) -> dict:
    t, a, sample_seed = instance
    obj = _pair_obj((t, a))
    obj["sample_seed"] = sample_seed
    return obj


@dataclass(frozen=True)
class _Suite:
    gen: object
    check: object
    ser: object = _pair_obj


_SUITES: dict[str, _Suite] = {
    "bhatia-semrl": _Suite(_gen_dense_pair, _check_bhatia_semrl),
    "prop41": _Suite(_gen_disjoint, _check_prop41),
    "kittaneh": _Suite(_gen_psd_pair, _check_kittaneh),
    "iso-max": _Suite(_gen_psd_pair, _check_iso_max),
    "cariso": _Suite(_gen_cariso, _check_cariso),
    "projections": _Suite(_gen_projection_pair, _check_projections),
    "invertible": _Suite(_gen_pd_pair, _check_invertible),
    "prop51": _Suite(_gen_prop51, _check_prop51),
    "si-bj": _Suite(_gen_si_bj, _check_si_bj),
    "thm33": _Suite(_gen_planted_real, _check_thm33),
    "thm35": _Suite(_gen_planted, _check_thm35),
    "gamma": _Suite(_gen_gamma, _check_gamma, _ser_gamma),
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(cfg: SuiteConfig) -> SuiteResult:
    """Execute one suite; the seed schedule (base seed, trial index) makes
    serial and parallel execution identical."""
    if cfg.suite not in _SUITES:
        raise BadSuite(f"unknown suite {cfg.suite!r}; known: {', '.join(SUITE_NAMES)}")
    suite = _SUITES[cfg.suite]
    fields = cfg.fields()
    result = SuiteResult(cfg.suite, cfg.trials)
    for i in range(cfg.trials):
        field = fields[i % len(fields)]
        dim = cfg.dims[(i // len(fields)) % len(cfg.dims)]
        rng = np.random.default_rng([cfg.seed, i])
        instance = suite.gen(rng, dim, field, i)
        try:
            outcome = suite.check(instance, cfg.tolerances)
        except (TheoremViolation, CriterionMismatch) as exc:
            record = {
                "trial": i,
                "seed": [cfg.seed, i],
                "inputs": suite.ser(instance),
                "error": str(exc),
            }
            evidence = getattr(exc, "evidence", None) or getattr(exc, "margins", None)
            if evidence:
                record["evidence"] = _json_safe(evidence)
            result.failures.append(record)
            result.failed += 1
            continue
        if outcome == "pass":
            result.passed += 1
        else:
            result.inconclusive += 1
    return result


def replay_failure(suite_name: str, record: dict, tol: Tolerances = DEFAULT_TOL):
    """Re-run a recorded failure from its seed schedule; returns the raised
    violation (or None if it no longer reproduces)."""
    suite = _SUITES[suite_name]
    base, i = record["seed"]
    rng = np.random.default_rng([base, i])
    # dims/field are recoverable from the serialized inputs
    inputs = record["inputs"]
    left = inputs["left"]
    dim = left["rows"]
    field = Field(left["field"])
    instance = suite.gen(rng, dim, field, i)
    try:
        suite.check(instance, tol)
    except (TheoremViolation, CriterionMismatch) as exc:
        return exc
    return None


def _json_safe(obj):
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return _json_safe(obj.tolist())
    return obj


# -- exact example reproduction ----------------------------------------------


def _row(example: str, quantity: str, expected: float, computed: float) -> dict:
    delta = abs(computed - expected)
    return {
        "example": example,
        "quantity": quantity,
        "expected": expected,
        "computed": computed,
        "abs_delta": delta,
        "ok": delta <= 1e-12,
    }


def _flag_row(example: str, quantity: str, ok: bool) -> dict:
    return {
        "example": example,
        "quantity": quantity,
        "expected": 1.0,
        "computed": 1.0 if ok else 0.0,
        "abs_delta": 0.0 if ok else 1.0,
        "ok": ok,
    }


def reproduce_examples(tol: Tolerances = DEFAULT_TOL) -> list[dict]:
    """Recompute every worked diagonal example; the targets are exact in
    floating point, so value rows assert |delta| <= 1e-12."""
    rows: list[dict] = []
    dyadic = [0.5**k for k in range(1, 21)]

    # 2x2 pair A = diag(4, 3), B = diag(0, 1) under the operator norm
    a = Matrix.real(np.diag([4.0, 3.0]))
    b = Matrix.real(np.diag([0.0, 1.0]))
    ea, eb = _op_elements(a, b)
    rows.append(_row("iso-pair", "norm(A+B)", 4.0, operator_norm(a + b)))
    rows.append(_row("iso-pair", "norm(A-B)", 4.0, operator_norm(a - b)))
    cross = a.data.T @ b.data
    rows.append(
        _row(
            "iso-pair", "max|A*B - diag(0,3)|", 0.0,
            float(np.max(np.abs(cross - np.diag([0.0, 3.0])))),
        )
    )
    rows.append(
        _row(
            "si-operator", "max |norm(A+tB) - 4| over dyadic t", 0.0,
            max(abs(operator_norm(a + b.scale(t)) - 4.0) for t in dyadic),
        )
    )
    rows.append(
        _row(
            "si-operator", "max |norm(A-tB) - 4| over dyadic t", 0.0,
            max(abs(operator_norm(a - b.scale(t)) - 4.0) for t in dyadic),
        )
    )
    rows.append(_row("si-operator", "norm(A+5B)", 8.0, operator_norm(a + b.scale(5.0))))
    rows.append(_row("si-operator", "norm(A-5B)", 4.0, operator_norm(a - b.scale(5.0))))
    rows.append(
        _row(
            "si-operator", "roberts deviation at t=5", 4.0,
            abs(operator_norm(a + b.scale(5.0)) - operator_norm(a - b.scale(5.0))),
        )
    )
    rows.append(_flag_row("si-operator", "SI holds", si_check(ea, eb, tol).holds))
    rows.append(
        _flag_row(
            "si-operator", "roberts fails",
            roberts_check(ea, eb, tol).decision is Decision.FAILS,
        )
    )

    # trace-norm pair A = diag(1, -2) against the identity
    c = Matrix.real(np.diag([1.0, -2.0]))
    eye = Matrix.identity(2)
    ec = NormedElement(c, schatten(1.0))
    ei = NormedElement(eye, schatten(1.0))

    def tn(m: Matrix) -> float:
        return float(np.sum(np.abs(np.linalg.eigvalsh(m.data))))

    rows.append(_row("si-trace", "trace-norm(A+I)", 3.0, tn(c + eye)))
    rows.append(_row("si-trace", "trace-norm(A-I)", 3.0, tn(c - eye)))
    rows.append(
        _row(
            "si-trace", "max |trace-norm(A+tI) - 3| over dyadic t", 0.0,
            max(abs(tn(c + eye.scale(t)) - 3.0) for t in dyadic),
        )
    )
    rows.append(
        _row(
            "si-trace", "max |trace-norm(A-tI) - 3| over dyadic t", 0.0,
            max(abs(tn(c - eye.scale(t)) - 3.0) for t in dyadic),
        )
    )
    rows.append(_row("si-trace", "trace-norm(A+2I)", 3.0, tn(c + eye.scale(2.0))))
    rows.append(_row("si-trace", "trace-norm(A-2I)", 5.0, tn(c - eye.scale(2.0))))
    rows.append(_flag_row("si-trace", "SI holds", si_check(ec, ei, tol).holds))
    rows.append(
        _flag_row(
            "si-trace", "roberts fails",
            roberts_check(ec, ei, tol).decision is Decision.FAILS,
        )
    )

    # projections onto the planes z=0 and x=0 in R^3
    pz = Matrix.real(np.diag([1.0, 1.0, 0.0]))
    px = Matrix.real(np.diag([0.0, 1.0, 1.0]))
    rows.append(_row("plane-projections", "norm(P+Q)", 2.0, operator_norm(pz + px)))
    rows.append(_row("plane-projections", "norm(P-Q)", 1.0, operator_norm(pz - px)))
    epz, epx = _op_elements(pz, px)
    rows.append(
        _flag_row(
            "plane-projections", "iso fails",
            iso_check(epz, epx, tol).decision is Decision.FAILS,
        )
    )
    rpt_planes, _ = bj_spectral(pz, px, tol)
    rows.append(_flag_row("plane-projections", "BJ holds", rpt_planes.holds))
    rows.append(
        _flag_row(
            "plane-projections", "disjoint support is false",
            not disjoint_support(pz, px, tol),
        )
    )

    # nested projections diag(1,1,0) over diag(1,0,0)
    pn, pm = nested_projections(3)
    rpt_nested, wit = bj_spectral(pn, pm, tol)
    rows.append(_flag_row("nested-projections", "BJ holds", rpt_nested.holds))
    rows.append(
        _row(
            "nested-projections", "witness pairing residual", 0.0,
            wit.pairing_residual if wit is not None else float("inf"),
        )
    )
    rows.append(
        _flag_row(
            "nested-projections", "closure membership evidence",
            gamma_test(pn, pm, samples=8, seed=0, tol=tol).outcome
            is GammaOutcome.MEMBER_EVIDENCE,
        )
    )

    # diagonal truncations: the BJ deficit shrinks but never vanishes
    deltas: dict[int, float] = {}
    for n in (4, 10, 50, 100):
        t_n, a_n = thm34_truncation(n)
        et, ean = _op_elements(t_n, a_n)
        rpt = bj_check(et, ean, tol)
        deltas[n] = -rpt.margin
        rows.append(_flag_row("truncation", f"delta_{n} > 0", deltas[n] > 0.0))
        spec_rpt, _ = bj_spectral(t_n, a_n, tol)
        rows.append(
            _row(
                "truncation", f"spectral margin n={n}",
                -(n - 1.0) / n**2, spec_rpt.margin,
            )
        )
    rows.append(
        _flag_row(
            "truncation", "delta strictly decreasing",
            deltas[4] > deltas[10] > deltas[50] > deltas[100],
        )
    )
    rows.append(
        _flag_row("truncation", "delta_100 < delta_4 / 2", deltas[100] < deltas[4] / 2.0)
    )
    return rows


def reproduction_ok(rows: list[dict]) -> bool:
    return all(r["ok"] for r in rows)
