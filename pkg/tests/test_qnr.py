import numpy as np
import pytest

from jspectra import build_system, enclosure_params, in_enclosure, optimize_bound
from jspectra import enclosure as enc
from jspectra import qnr, schur
from jspectra.errors import BstarXZero, DimensionTooSmall, LambdaInSpectrumD, ZeroVector

from _systems import GOLDEN, random_condA_system, random_system, sys1, sys2

SYS0 = build_system([[0.0]], [[1.0]], [[0.0]])


def test_lambda_pm_sys1():
    pt = qnr.lambda_pm(sys1(), [1.0], [1.0])
    assert (pt.alpha, pt.delta, pt.beta) == (3.0, 0.0, 1.0)
    assert pt.lambda_plus == pytest.approx(GOLDEN)
    assert pt.lambda_minus == pytest.approx(3 - GOLDEN)


def test_lambda_pm_sys0_branch():
    pt = qnr.lambda_pm(SYS0, [1.0], [1.0])
    assert pt.lambda_plus == 1j and pt.lambda_minus == -1j


def test_lambda_pm_decoupled():
    s = build_system(np.diag([2.0, 5.0]), np.zeros((2, 2)), np.diag([1.0, 3.0]))
    rng = np.random.default_rng(0)
    x, y = rng.standard_normal(2), rng.standard_normal(2)
    pt = qnr.lambda_pm(s, x, y)
    assert pt.lambda_plus == pytest.approx(max(pt.alpha, pt.delta))
    assert pt.lambda_minus == pytest.approx(min(pt.alpha, pt.delta))


def test_lambda_pm_are_compression_eigenvalues():
    rng = np.random.default_rng(1)
    for _ in range(100):
        s = random_system(rng, 6)
        x, y = rng.standard_normal(s.n1), rng.standard_normal(s.n2)
        pt = qnr.lambda_pm(s, x, y)
        Mxy = np.array([[pt.alpha, pt.beta], [-pt.beta, pt.delta]])
        ref = np.sort_complex(np.linalg.eigvals(Mxy))
        np.testing.assert_allclose(np.sort_complex(np.array(pt.values)), ref, atol=1e-10)


def test_zero_vectors_rejected():
    with pytest.raises(ZeroVector):
        qnr.lambda_pm(sys1(), [0.0], [1.0])


def test_sample_counts_and_reproducibility():
    pts = qnr.sample_qnr(sys2(), 7, seed=3)
    assert len(qnr.branch_values(pts)) == 14
    again = qnr.branch_values(qnr.sample_qnr(sys2(), 7, seed=3))
    np.testing.assert_array_equal(qnr.branch_values(pts), again)


def test_sample_sys0_is_nonreal_and_sys1_real():
    assert np.all(qnr.branch_values(qnr.sample_qnr(SYS0, 5, 0)).imag != 0)
    assert np.all(qnr.branch_values(qnr.sample_qnr(sys1(), 50, 0)).imag == 0)


def test_samples_lie_in_enclosure_and_obey_estimates():
    rng = np.random.default_rng(2)
    for i in range(200):
        s = random_condA_system(rng) if i % 2 else random_system(rng)
        a, b, p = optimize_bound(s)
        floor = 1e-9 * (1 + s.norm_A + s.norm_B ** 2)
        for pt in qnr.sample_qnr(s, 20, i):
            for z in pt.values:
                assert in_enclosure(z, p)
            assert pt.lambda_minus.real <= p.mu + enc.box_tolerance(pt.lambda_minus)
            assert abs(pt.beta) ** 2 <= b * pt.alpha + a + floor
            if p.condA:
                assert pt.lambda_minus.real <= p.mu + enc.box_tolerance(pt.lambda_minus)
                assert pt.lambda_plus.real >= p.mu_plus - enc.box_tolerance(pt.lambda_plus)


def test_point_spectrum_in_qnr():
    rng = np.random.default_rng(7)
    for _ in range(50):
        s = random_system(rng, 6)
        z, V = np.linalg.eig(s.M)
        for k in range(len(z)):
            x, y = V[:s.n1, k], V[s.n1:, k]
            if np.linalg.norm(x) < 1e-8 or np.linalg.norm(y) < 1e-8:
                continue
            vals = np.array(qnr.lambda_pm(s, x, y).values)
            assert np.min(np.abs(vals - z[k])) <= 1e-8 * (1 + s.norm_M)


def test_embed_WD():
    pt = qnr.embed_WD(sys2(), [1.0])
    np.testing.assert_allclose(np.abs(pt.x), [0.0, 1.0], atol=1e-15)
    assert 0.0 in (pt.lambda_plus, pt.lambda_minus)
    s = build_system(np.diag([1.0, 2.0, 3.0]), np.ones((3, 2)), np.diag([-4.0, 7.0]))
    pt = qnr.embed_WD(s, [0.0, 1.0])
    assert 7.0 in (pytest.approx(pt.lambda_plus.real), pytest.approx(pt.lambda_minus.real))
    with pytest.raises(DimensionTooSmall):
        qnr.embed_WD(sys1(), [1.0])


def test_det_identity_sys1():
    lhs, rhs = qnr.det_identity_check(sys1(), 1.5, [1.0])
    assert lhs == pytest.approx(-1.25) and rhs == pytest.approx(-1.25)
    lhs, rhs = qnr.det_identity_check(sys1(), GOLDEN, [1.0])
    assert abs(lhs) < 1e-14 and abs(rhs) < 1e-14


def test_det_identity_random_and_equality_case():
    rng = np.random.default_rng(10)
    p_checked = 0
    for i in range(200):
        s = random_condA_system(rng, 6) if i % 2 else random_system(rng, 6)
        x = rng.standard_normal(s.n1)
        lam = float(rng.uniform(-5, 5))
        if np.min(np.abs(s.spec_D.values - lam)) < 0.05:
            continue
        lhs, rhs = qnr.det_identity_check(s, lam, x)
        assert abs(lhs - rhs) <= 1e-10 * (1 + abs(lhs))
        params = optimize_bound(s).params
        p = schur.rayleigh_p(s, params, x).value
        if p is not None and np.min(np.abs(s.spec_D.values - p)) > 1e-6:
            lhs, rhs = qnr.det_identity_check(s, p, x)
            assert abs(lhs) <= 1e-8 * (1 + p * p)
            y = schur.lift_kernel_vector(s, p, x)[s.n1:]
            assert qnr.lambda_pm(s, x, y).lambda_plus == pytest.approx(p, rel=1e-9)
            p_checked += 1
    assert p_checked > 50


def test_det_identity_errors():
    with pytest.raises(LambdaInSpectrumD):
        qnr.det_identity_check(sys1(), 0.0, [1.0])
    with pytest.raises(BstarXZero):
        qnr.det_identity_check(sys2(), 2.0, [0.0, 1.0])


def test_branch_sqrt():
    assert qnr.branch_sqrt(4.0) == 2.0
    assert qnr.branch_sqrt(-4.0) == 2j
