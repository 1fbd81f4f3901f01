"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned in the assertions below.
"""

import time

import numpy as np
import pytest

from orthomat.linalg import Matrix, operator_norm
from orthomat.norms import NormedElement, operator_two, schatten
from orthomat.ortho import Decision, bj_check, roberts_check, si_check
from orthomat.hilbert import (
    GammaOutcome,
    ProbeOutcome,
    bj_spectral,
    gamma_test,
    o_ta_subspace_probe,
)
from orthomat.verify import (
    SUITE_NAMES,
    SuiteConfig,
    generators,
    run_suite,
    thm34_truncation,
)
from orthomat.linalg import Field

from tutil import diag_real, op_el


def _report(criterion: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"[PASS] {criterion}{suffix}")


A43 = diag_real(4, 3)
B43 = diag_real(0, 1)
A56 = diag_real(1, -2)
EYE2 = Matrix.identity(2)


def test_criterion_01_norm_identities_of_the_iso_pair():
    start = time.perf_counter()
    n_plus = operator_norm(A43 + B43)
    n_minus = operator_norm(A43 - B43)
    cross = A43.data.T @ B43.data
    elapsed = time.perf_counter() - start
    assert abs(n_plus - 4.0) <= 1e-12
    assert abs(n_minus - 4.0) <= 1e-12
    assert np.max(np.abs(cross - np.diag([0.0, 3.0]))) <= 1e-12
    # warm path must be well under a millisecond
    start = time.perf_counter()
    operator_norm(A43 + B43)
    operator_norm(A43 - B43)
    A43.data.T @ B43.data
    warm = time.perf_counter() - start
    assert warm < 1e-3
    _report("criterion 1: iso-pair norm identities", f"warm {1e6 * warm:.0f} us")


def test_criterion_02_dyadic_scales_and_roberts_violation():
    x, y = op_el(A43), op_el(B43)
    for k in range(1, 21):
        lam = 0.5**k
        assert abs(operator_norm(A43 + B43.scale(lam)) - 4.0) <= 1e-12
        assert abs(operator_norm(A43 - B43.scale(lam)) - 4.0) <= 1e-12
    assert abs(operator_norm(A43 + B43.scale(5.0)) - 8.0) <= 1e-12
    assert abs(operator_norm(A43 - B43.scale(5.0)) - 4.0) <= 1e-12
    si = si_check(x, y)
    assert si.decision is Decision.HOLDS
    rob = roberts_check(x, y)
    assert rob.decision is Decision.FAILS
    # the canonical violating scale: |A+5B| - |A-5B| = 4, decisively nonzero
    viol_at_5 = abs(
        operator_norm(A43 + B43.scale(5.0)) - operator_norm(A43 - B43.scale(5.0))
    )
    assert abs(viol_at_5 - 4.0) <= 1e-12
    assert rob.lambda_star is not None and abs(rob.lambda_star) > 1.0
    _report("criterion 2: dyadic isosceles scales, SI holds, Roberts fails")


def test_criterion_03_trace_norm_example():
    tn = lambda m: float(np.sum(np.abs(np.linalg.eigvalsh(m.data))))
    for k in range(1, 21):
        lam = 0.5**k
        assert abs(tn(A56 + EYE2.scale(lam)) - 3.0) <= 1e-12
        assert abs(tn(A56 - EYE2.scale(lam)) - 3.0) <= 1e-12
    assert abs(tn(A56 + EYE2) - 3.0) <= 1e-12
    assert abs(tn(A56 - EYE2) - 3.0) <= 1e-12
    assert abs(tn(A56 + EYE2.scale(2.0)) - 3.0) <= 1e-12
    assert abs(tn(A56 - EYE2.scale(2.0)) - 5.0) <= 1e-12
    x = NormedElement(A56, schatten(1))
    y = NormedElement(EYE2, schatten(1))
    assert si_check(x, y).decision is Decision.HOLDS
    assert roberts_check(x, y).decision is Decision.FAILS
    _report("criterion 3: trace-norm example, SI holds, Roberts fails")


def test_criterion_04_spectral_vs_minimization_equivalence():
    start = time.perf_counter()
    cfg = SuiteConfig(
        suite="bhatia-semrl", trials=5000, dims=(2, 3, 4, 5, 6), field="both", seed=2024
    )
    res = run_suite(cfg)
    elapsed = time.perf_counter() - start
    assert res.failed == 0, res.failures[:1]
    assert elapsed < 60.0
    _report(
        "criterion 4: Bhatia-Semrl equivalence, 1000 pairs/dim x {2..6}, both fields",
        f"{elapsed:.1f}s, {res.inconclusive} inconclusive",
    )


def test_criterion_05_disjoint_support_consequences():
    res = run_suite(
        SuiteConfig(suite="prop41", trials=500, dims=(2, 3, 4, 5, 6), field="both", seed=41)
    )
    assert res.failed == 0, res.failures[:1]
    _report("criterion 5: disjoint support forces BJ/Roberts/iso", f"{res.passed} passed")


def test_criterion_06_positive_norm_chain():
    res = run_suite(
        SuiteConfig(
            suite="kittaneh", trials=1000, dims=(2, 3, 4, 5, 6, 7, 8), field="both", seed=6
        )
    )
    assert res.failed == 0, res.failures[:1]
    assert res.passed == 1000
    _report("criterion 6: five-term norm chain on 1000 PSD pairs")


def test_criterion_07_iso_max_and_witness_agreement():
    res = run_suite(
        SuiteConfig(suite="iso-max", trials=500, dims=(2, 3, 4, 5, 6), field="both", seed=7)
    )
    assert res.failed == 0, res.failures[:1]
    res_w = run_suite(
        SuiteConfig(suite="cariso", trials=500, dims=(2, 3, 4, 5, 6), field="both", seed=7)
    )
    assert res_w.failed == 0, res_w.failures[:1]
    _report("criterion 7: max-norm iso characterization and witness existence")


def test_criterion_08_projection_equivalences():
    res = run_suite(
        SuiteConfig(
            suite="projections", trials=500, dims=(3, 4, 5, 6, 7, 8), field="both", seed=8
        )
    )
    assert res.failed == 0, res.failures[:1]
    pz = diag_real(1, 1, 0)
    px = diag_real(0, 1, 1)
    from orthomat.positive import projection_propositions

    bundle = projection_propositions(pz, px)
    assert bundle.iso.decision is Decision.FAILS
    rpt, _ = bj_spectral(pz, px)
    assert rpt.decision is Decision.HOLDS
    _report("criterion 8: projections (iso <=> zero product; planes instance)")


def test_criterion_09_invertible_pairs_never_orthogonal():
    res = run_suite(
        SuiteConfig(suite="invertible", trials=500, dims=(2, 3, 4, 5, 6), field="both", seed=9)
    )
    assert res.failed == 0, res.failures[:1]
    assert res.passed == 500  # every instance failed both relations decisively
    _report("criterion 9: positive definite pairs fail iso and BJ decisively")


def test_criterion_10_truncation_gap_demonstration():
    start = time.perf_counter()
    deltas = {}
    for n in (4, 10, 50, 100):
        t, a = thm34_truncation(n)
        rpt = bj_check(op_el(t), op_el(a))
        assert rpt.decision is Decision.FAILS
        deltas[n] = -rpt.margin
        spectral, _ = bj_spectral(t, a)
        assert spectral.decision is Decision.FAILS
        # 1x1 compression of A*T at the attainment vector e_n is (n-1)/n^2 > 0
        assert abs(spectral.margin + (n - 1.0) / n**2) <= 1e-12
    elapsed = time.perf_counter() - start
    assert all(d > 0 for d in deltas.values())
    assert deltas[4] > deltas[10] > deltas[50] > deltas[100]
    assert deltas[100] < deltas[4] / 2.0
    assert elapsed < 10.0
    _report(
        "criterion 10: truncation BJ deficit positive and shrinking",
        f"delta_4={deltas[4]:.4f} .. delta_100={deltas[100]:.5f}, {elapsed:.1f}s",
    )


def test_criterion_11_section5_suites():
    res = run_suite(
        SuiteConfig(suite="prop51", trials=200, dims=(2, 3, 4, 5), field="both", seed=51)
    )
    assert res.failed == 0, res.failures[:1]
    # the two worked pairs
    from orthomat.ortho import bj_from_si

    assert bj_from_si(op_el(A43), op_el(B43)).decision is Decision.HOLDS
    assert (
        bj_from_si(NormedElement(A56, schatten(1)), NormedElement(EYE2, schatten(1))).decision
        is Decision.HOLDS
    )
    res_si = run_suite(
        SuiteConfig(suite="si-bj", trials=100, dims=(2, 3, 4, 5), field="real", seed=52)
    )
    assert res_si.failed == 0, res_si.failures[:1]
    _report("criterion 11: double-BJ => iso and SI => r-orthogonality suites")


def test_criterion_12_zero_set_structure():
    t = Matrix.identity(2)
    a = diag_real(1, -1)
    g = gamma_test(t, a, samples=64, seed=12)
    assert g.outcome is GammaOutcome.COUNTEREXAMPLE
    assert abs(abs(g.value) - 2.0) <= 1e-9
    p = o_ta_subspace_probe(t, a, samples=64, seed=12)
    assert p.outcome is ProbeOutcome.VIOLATION
    nested = gamma_test(diag_real(1, 1, 0), diag_real(1, 0, 0), samples=16, seed=12)
    assert nested.outcome is GammaOutcome.MEMBER_EVIDENCE
    nested_probe = o_ta_subspace_probe(
        diag_real(1, 1, 0), diag_real(1, 0, 0), samples=16, seed=12
    )
    assert nested_probe.outcome is ProbeOutcome.CLOSED
    disjoint = gamma_test(diag_real(1, 0), diag_real(0, 1), samples=16, seed=12)
    assert disjoint.outcome is GammaOutcome.MEMBER_EVIDENCE
    disjoint_probe = o_ta_subspace_probe(
        diag_real(1, 0), diag_real(0, 1), samples=16, seed=12
    )
    assert disjoint_probe.outcome is ProbeOutcome.CLOSED
    _report("criterion 12: bilinear counterexample value 2 and closure probes")


def test_criterion_13_suites_are_deterministic():
    for suite in SUITE_NAMES:
        cfg = SuiteConfig(suite=suite, trials=20, dims=(2, 3, 4), field="both", seed=13)
        first = run_suite(cfg).to_json()
        second = run_suite(cfg).to_json()
        assert first == second, f"suite {suite} not byte-identical"
    _report("criterion 13: byte-identical reports for every suite")
