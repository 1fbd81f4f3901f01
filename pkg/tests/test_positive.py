import numpy as np
import pytest
from numpy.testing import assert_allclose

from orthomat.errors import (
    NotHermitian,
    NotProjection,
    NotPsd,
    PreconditionUnmet,
    ZeroOperator,
)
from orthomat.linalg import Matrix, Tolerances, operator_norm
from orthomat.norms import NormedElement, operator_two
from orthomat.ortho import Decision, iso_check
from orthomat.hilbert import bj_spectral, inner
from orthomat.positive import (
    accretive_check,
    accretive_iso_corollary,
    invertible_pair_impossibility,
    iso_direction_signs,
    iso_intersection_witness,
    iso_intersection_witness_complex,
    kittaneh_bounds,
    max_min_pair,
    positive_iso_check,
    positive_iso_witness,
    projection_propositions,
    psd_certify,
)

from tutil import diag_real, gauss, op_el, rand_unitary

TOL = Tolerances()


def rand_psd(rng, n, cplx=False):
    g = gauss(rng, n, n, cplx)
    return Matrix.of(g.conj().T @ g)


# -- certification ---------------------------------------------------------------


def test_psd_certify_diagonal_sqrt():
    cert = psd_certify(diag_real(4, 3))
    assert_allclose(cert.sqrt.data, np.diag([2.0, np.sqrt(3.0)]), atol=1e-12)
    assert cert.min_eigenvalue == pytest.approx(3.0)


def test_psd_certify_rejects_indefinite():
    with pytest.raises(NotPsd):
        psd_certify(diag_real(1, -2))


def test_psd_certify_rejects_nonhermitian():
    with pytest.raises(NotHermitian):
        psd_certify(Matrix.real([[0.0, 1.0], [0.0, 0.0]]))


@pytest.mark.parametrize("cplx", [False, True])
def test_psd_certify_gram_reconstruction(cplx):
    rng = np.random.default_rng(211)
    for _ in range(10):
        m = rand_psd(rng, 5, cplx)
        cert = psd_certify(m)
        rec = cert.sqrt.data @ cert.sqrt.data
        scale = max(np.max(np.abs(m.data)), 1e-300)
        assert np.max(np.abs(rec - m.data)) / scale < 1e-8


# -- Kittaneh chain -----------------------------------------------------------------


def test_kittaneh_disjoint_blocks_all_ones():
    chain = kittaneh_bounds(diag_real(1, 0), diag_real(0, 1))
    assert chain.as_tuple() == pytest.approx((1.0, 1.0, 1.0, 1.0, 1.0), abs=1e-12)


def test_kittaneh_identity_pair():
    eye = Matrix.identity(2)
    chain = kittaneh_bounds(eye, eye)
    assert chain.as_tuple() == pytest.approx((0.0, 0.0, 1.0, 2.0, 2.0), abs=1e-12)


@pytest.mark.parametrize("cplx", [False, True])
def test_kittaneh_random_pairs(cplx):
    rng = np.random.default_rng(223)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        kittaneh_bounds(rand_psd(rng, n, cplx), rand_psd(rng, n, cplx))


# -- max-norm characterization ---------------------------------------------------------


def test_positive_iso_example_pair():
    rpt = positive_iso_check(diag_real(4, 3), diag_real(0, 1))
    assert rpt.decision is Decision.HOLDS
    assert rpt.details["norm_max"] == pytest.approx(4.0)


def test_positive_iso_identity_pair_fails():
    eye = Matrix.identity(2)
    rpt = positive_iso_check(eye, eye)
    assert rpt.decision is Decision.FAILS


def test_positive_iso_agrees_with_generic_on_random_pairs():
    rng = np.random.default_rng(227)
    for _ in range(150):
        n = int(rng.integers(2, 6))
        a = rand_psd(rng, n)
        b = rand_psd(rng, n)
        positive_iso_check(a, b)  # built-in monitor raises on disagreement


def test_max_min_pair_tie_goes_first():
    mm = max_min_pair(Matrix.identity(2), Matrix.identity(2))
    assert mm.tie
    assert mm.big is not mm.small


# -- attainment witness ------------------------------------------------------------------


def test_witness_disjoint_blocks():
    w = positive_iso_witness(diag_real(1, 0), diag_real(0, 1))
    assert w is not None
    assert abs(w[0]) == pytest.approx(1.0, abs=1e-10)


def test_witness_example_pair():
    w = positive_iso_witness(diag_real(4, 3), diag_real(0, 1))
    assert w is not None
    assert abs(w[0]) == pytest.approx(1.0, abs=1e-10)
    ba = diag_real(0, 1).data @ diag_real(4, 3).data
    assert abs(inner(ba @ w, w)) <= 1e-10


def test_witness_absent_for_identity_pair():
    assert positive_iso_witness(Matrix.identity(2), Matrix.identity(2)) is None


def test_witness_requires_nonzero():
    with pytest.raises(ZeroOperator):
        positive_iso_witness(Matrix.zeros(2, 2), Matrix.identity(2))


def test_witness_existence_tracks_decision_on_random_pairs():
    rng = np.random.default_rng(229)
    for _ in range(100):
        n = int(rng.integers(2, 6))
        a = rand_psd(rng, n)
        b = rand_psd(rng, n)
        positive_iso_witness(a, b)  # internal contract raises on mismatch


# -- accretivity ----------------------------------------------------------------------------


def test_accretive_basics():
    assert accretive_check(Matrix.identity(3))
    assert accretive_check(Matrix.real([[0.0, -1.0], [1.0, 0.0]]))
    assert not accretive_check(diag_real(1, -1))


def test_accretive_corollary_disjoint():
    bundle = accretive_iso_corollary(diag_real(1, 0), diag_real(0, 1))
    assert bundle.triggered
    assert bundle.bj_ab.holds or bundle.bj_ba.holds
    assert bundle.witness is not None
    assert bundle.witness_pairing <= 1e-10


def test_accretive_corollary_example_pair():
    bundle = accretive_iso_corollary(diag_real(4, 3), diag_real(0, 1))
    assert bundle.triggered
    assert bundle.bj_ab.holds or bundle.bj_ba.holds


def test_accretive_corollary_untriggered_for_identity():
    bundle = accretive_iso_corollary(Matrix.identity(2), Matrix.identity(2))
    assert not bundle.triggered


# -- invertible impossibility -----------------------------------------------------------------


def test_invertible_identity_multiples():
    bundle = invertible_pair_impossibility(Matrix.identity(2), Matrix.identity(2).scale(2.0))
    assert bundle.both_fail
    assert bundle.iso.margin == pytest.approx(-2.0, abs=1e-9)


def test_invertible_crossed_diagonals():
    bundle = invertible_pair_impossibility(diag_real(2, 1), diag_real(1, 2))
    assert bundle.both_fail
    # oracle for the BJ deficit: dense grid on max(|2 + t|, |1 + 2t|)
    grid = np.arange(-2, 2, 1e-4)
    fmin = min(max(abs(2 + t), abs(1 + 2 * t)) for t in grid)
    assert bundle.bj.minimum == pytest.approx(fmin, abs=1e-4)


def test_invertible_requires_definiteness():
    with pytest.raises(PreconditionUnmet):
        invertible_pair_impossibility(diag_real(1, 0), Matrix.identity(2))


def test_invertible_random_pairs():
    rng = np.random.default_rng(233)
    for _ in range(60):
        n = int(rng.integers(2, 6))
        g1, g2 = gauss(rng, n, n), gauss(rng, n, n)
        a = g1.T @ g1
        b = g2.T @ g2
        a = Matrix.real(a + 0.1 * np.linalg.norm(a, 2) * np.eye(n))
        b = Matrix.real(b + 0.1 * np.linalg.norm(b, 2) * np.eye(n))
        bundle = invertible_pair_impossibility(a, b)
        assert bundle.both_fail


# -- projections --------------------------------------------------------------------------------


def test_projection_disjoint_pair():
    bundle = projection_propositions(diag_real(1, 0), diag_real(0, 1))
    assert bundle.iso.decision is Decision.HOLDS
    assert bundle.product_zero
    assert bundle.bj_pq.holds and bundle.bj_qp.holds


def test_projection_planes_bj_without_disjoint_support():
    pz = diag_real(1, 1, 0)
    px = diag_real(0, 1, 1)
    bundle = projection_propositions(pz, px)
    assert bundle.iso.decision is Decision.FAILS
    assert not bundle.product_zero
    assert operator_norm(pz + px) == pytest.approx(2.0, abs=1e-12)
    assert operator_norm(pz - px) == pytest.approx(1.0, abs=1e-12)
    rpt, _ = bj_spectral(pz, px)
    assert rpt.decision is Decision.HOLDS


def test_projection_against_identity():
    bundle = projection_propositions(diag_real(1, 0), Matrix.identity(2))
    assert bundle.identity_branch
    assert bundle.iso.decision is Decision.FAILS
    zero_bundle = projection_propositions(Matrix.zeros(2, 2), Matrix.identity(2))
    assert zero_bundle.iso.decision is Decision.HOLDS


def test_projection_validation():
    with pytest.raises(NotProjection):
        projection_propositions(diag_real(1, 2), diag_real(1, 0))


def test_projection_random_pairs():
    rng = np.random.default_rng(239)
    for _ in range(60):
        n = int(rng.integers(3, 8))
        r1, r2 = int(rng.integers(1, n)), int(rng.integers(1, n))
        q1 = rand_unitary(rng, n)[:, :r1]
        q2 = rand_unitary(rng, n)[:, :r2]
        projection_propositions(
            Matrix.real(q1 @ q1.T), Matrix.real(q2 @ q2.T)
        )  # monitor raises on violation


# -- attainment-direction theorems -----------------------------------------------------------


def test_quadratic_sum_chain_with_shared_attainment():
    # A = diag(4,3), B = diag(0,1): e1 attains both A+B and A-B with
    # <Ae1, Be1> = 0, giving the two-sided square-sum bound
    a, b = diag_real(4, 3), diag_real(0, 1)
    x0 = iso_intersection_witness(a, b)
    assert x0 is not None
    assert abs(inner(a.data @ x0, b.data @ x0)) <= 1e-9
    na2 = operator_norm(a) ** 2
    nb2 = operator_norm(b) ** 2
    np2 = operator_norm(a + b) ** 2
    nm2 = operator_norm(a - b) ** 2
    assert na2 + nb2 <= np2 + nm2 + 1e-9
    assert np2 + nm2 <= 2 * (na2 + nb2) + 1e-9


def test_norm_one_pairs_with_common_attainment_reach_two():
    # unit-norm pairs sending a shared attainment vector to orthogonal
    # images: |A+B|^2 = |A-B|^2 = 2 exactly
    rng = np.random.default_rng(241)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        u = rand_unitary(rng, n)
        x0 = u[:, 0]
        img1 = u[:, 1] if n > 1 else x0
        a = np.outer(img1, x0)
        bimg = u[:, 2] if n > 2 else u[:, (1 % n)]
        if n == 2:
            bimg = u[:, 0]
        b = np.outer(bimg, x0)
        am, bm = Matrix.real(a), Matrix.real(b)
        assert operator_norm(am) == pytest.approx(1.0, abs=1e-12)
        x1 = iso_intersection_witness(am, bm)
        assert x1 is not None
        assert operator_norm(am + bm) ** 2 == pytest.approx(2.0, abs=1e-9)
        assert operator_norm(am - bm) ** 2 == pytest.approx(2.0, abs=1e-9)


def _pair_from_sum_diff(u, v, s_sum, s_diff):
    c = u @ np.diag(s_sum) @ u.T
    d = v @ np.diag(s_diff) @ v.T
    return Matrix.real((c + d) / 2.0), Matrix.real((c - d) / 2.0)


def test_overlapping_attainment_equivalence_positive():
    # attainment subspaces of A+B and A-B are 2-D in R^3 with equal norms:
    # isosceles orthogonality must come with a zero-pairing common vector
    rng = np.random.default_rng(251)
    for _ in range(20):
        u = rand_unitary(rng, 3)
        v = rand_unitary(rng, 3)
        a, b = _pair_from_sum_diff(u, v, [2.0, 2.0, 0.5], [2.0, 2.0, 0.3])
        iso = iso_check(op_el(a), op_el(b))
        x0 = iso_intersection_witness(a, b)
        assert iso.decision is Decision.HOLDS
        assert x0 is not None
        assert abs(inner(a.data @ x0, b.data @ x0)) <= 1e-8 * operator_norm(a) * operator_norm(b)


def test_overlapping_attainment_equivalence_negative():
    rng = np.random.default_rng(257)
    for _ in range(20):
        u = rand_unitary(rng, 3)
        v = rand_unitary(rng, 3)
        a, b = _pair_from_sum_diff(u, v, [2.0, 2.0, 0.5], [1.4, 1.4, 0.3])
        iso = iso_check(op_el(a), op_el(b))
        assert iso.decision is Decision.FAILS
        assert iso_intersection_witness(a, b) is None


def test_complex_double_system_witness():
    a = Matrix.complex(np.diag([4.0, 4.0, 1.0]))
    b = Matrix.complex(np.diag([0.0, 0.0, 1.0j]))
    got = iso_intersection_witness_complex(a, b)
    assert got is not None
    h0, k0 = got
    assert np.real(inner(a.data @ h0, b.data @ h0)) == pytest.approx(0.0, abs=1e-9)
    # second system pins the imaginary part through the rotated operator
    assert np.real(inner(a.data @ k0, (1j * b.data) @ k0)) == pytest.approx(0.0, abs=1e-9)


def test_direction_signs_track_isosceles():
    # equal-norm sum/diff with distinct attainment directions
    rng = np.random.default_rng(263)
    for _ in range(20):
        u = rand_unitary(rng, 3)
        v = rand_unitary(rng, 3)
        a, b = _pair_from_sum_diff(u, v, [3.0, 1.0, 0.5], [3.0, 1.2, 0.4])
        signs = iso_direction_signs(a, b)
        assert len(signs["plus"]) == 1 and len(signs["minus"]) == 1
        band = 1e-9 * operator_norm(a) * operator_norm(b)
        # isosceles pair: pairing >= 0 at the sum direction, <= 0 at the diff
        assert signs["plus"][0] >= -band
        assert signs["minus"][0] <= band


def test_direction_signs_sufficient_condition():
    rng = np.random.default_rng(269)
    hits = 0
    for _ in range(30):
        u = rand_unitary(rng, 3)
        v = rand_unitary(rng, 3)
        a, b = _pair_from_sum_diff(u, v, [3.0, 1.0, 0.5], [2.0, 1.2, 0.4])
        signs = iso_direction_signs(a, b)
        band = 1e-9 * operator_norm(a) * operator_norm(b)
        if signs["plus"][0] <= band and signs["minus"][0] >= -band:
            hits += 1
            assert iso_check(op_el(a), op_el(b)).decision is Decision.HOLDS
    # the sufficient condition fires rarely on unbalanced pairs
    assert hits >= 0
