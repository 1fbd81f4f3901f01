import numpy as np
import pytest
from numpy.testing import assert_allclose

from orthomat.errors import BadKind, BadSuite
from orthomat.linalg import Field, Matrix, operator_norm
from orthomat.hilbert import bj_spectral, disjoint_support
from orthomat.verify import (
    SUITE_NAMES,
    SuiteConfig,
    generators,
    nested_projections,
    replay_failure,
    reproduce_examples,
    reproduction_ok,
    run_suite,
    thm34_truncation,
)


def test_truncation_generator_values():
    t, a = thm34_truncation(4)
    assert_allclose(np.diagonal(t.data), [0.5, 0.5, 2 / 3, 3 / 4])
    assert_allclose(np.diagonal(a.data), [1.0, 0.5, 1 / 3, 0.25])


def test_nested_projection_generator():
    big, small = nested_projections(3)
    assert_allclose(big.data, np.diag([1.0, 1.0, 0.0]))
    assert_allclose(small.data, np.diag([1.0, 0.0, 0.0]))
    with pytest.raises(BadKind):
        nested_projections(2)


def test_projection_generator_residuals():
    for seed in range(5):
        p = generators("projection", 4, Field.REAL, seed)
        assert np.max(np.abs(p.data @ p.data - p.data)) <= 1e-12
        assert np.max(np.abs(p.data - p.data.T)) <= 1e-12


def test_disjoint_generator_is_disjoint():
    for seed in range(5):
        a, b = generators("disjoint-support-pair", 5, Field.COMPLEX, seed)
        assert disjoint_support(a, b)


def test_planted_generator_is_bj_orthogonal():
    for seed in range(5):
        t, a = generators("bj-orthogonal-pair", 4, Field.REAL, seed)
        rpt, wit = bj_spectral(t, a)
        assert rpt.holds and wit is not None


def test_pd_generator_floor():
    m = generators("positive-definite", 4, Field.REAL, 3)
    w = np.linalg.eigvalsh(m.data)
    assert w.min() >= 0.09 * operator_norm(m)


def test_generator_determinism():
    a = generators("dense", 3, Field.COMPLEX, 12)
    b = generators("dense", 3, Field.COMPLEX, 12)
    assert np.array_equal(a.data, b.data)


def test_generator_bad_kind():
    with pytest.raises(BadKind):
        generators("nosuch", 3, Field.REAL, 0)


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(suite="kittaneh", trials=0)
    with pytest.raises(ValueError):
        SuiteConfig(suite="kittaneh", trials=1, dims=(1,))
    with pytest.raises(ValueError):
        SuiteConfig(suite="kittaneh", trials=1, field="quaternionic")


def test_unknown_suite():
    with pytest.raises(BadSuite):
        run_suite(SuiteConfig(suite="nosuch", trials=1))


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_every_suite_runs_clean(suite):
    cfg = SuiteConfig(suite=suite, trials=24, dims=(2, 3, 4), field="both", seed=5)
    result = run_suite(cfg)
    assert result.failed == 0, result.failures[:1]
    assert result.passed + result.inconclusive == 24


def test_suite_results_are_byte_identical():
    for suite in ("bhatia-semrl", "gamma", "prop51"):
        cfg = SuiteConfig(suite=suite, trials=10, dims=(2, 3), field="both", seed=99)
        first = run_suite(cfg).to_json()
        second = run_suite(cfg).to_json()
        assert first == second


def test_replay_of_clean_trial_returns_none():
    record = {"seed": [5, 0], "inputs": {"left": {"rows": 3, "field": "real"}}}
    assert replay_failure("kittaneh", record) is None


def test_reproduction_rows_all_ok():
    rows = reproduce_examples()
    bad = [r for r in rows if not r["ok"]]
    assert not bad, bad
    assert reproduction_ok(rows)


def test_reproduction_deterministic():
    assert reproduce_examples() == reproduce_examples()


def test_reproduction_covers_every_example_family():
    rows = reproduce_examples()
    families = {r["example"] for r in rows}
    assert families == {
        "iso-pair",
        "si-operator",
        "si-trace",
        "plane-projections",
        "nested-projections",
        "truncation",
    }
