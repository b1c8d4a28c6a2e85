import numpy as np
import pytest

from jspectra import enclosure as enc
from jspectra import examples as ex
from jspectra.errors import GridTooSmall, InputError, NegativeWeight


def test_grid():
    s, h = ex.grid(3)
    assert h == 0.25
    np.testing.assert_allclose(s, [0.25, 0.5, 0.75])
    with pytest.raises(GridTooSmall):
        ex.grid(2)


def test_laplacian_closed_form():
    for n in (3, 16, 100):
        w = np.linalg.eigvalsh(ex.dirichlet_laplacian(n))
        ref = ex.laplacian_eigenvalues(n)
        np.testing.assert_allclose(w, ref, atol=1e-10 * ref[-1])
    np.testing.assert_allclose(ex.laplacian_eigenvalues(3),
                               16 * np.array([2 - 2 ** 0.5, 2, 2 + 2 ** 0.5]))


def test_example1_decoupled():
    s = ex.build_example1(ex.Example1Config(3, u=0.0, w=0.0))
    assert not s.is_coupled
    z = np.sort(s.spectrum.real)
    np.testing.assert_allclose(z, np.concatenate([[0, 0, 0], ex.laplacian_eigenvalues(3)]),
                               atol=1e-12)


def test_example1_unit_weight():
    s = ex.build_example1(ex.Example1Config(3, u=0.0, w=1.0))
    np.testing.assert_array_equal(s.B, np.eye(3))
    assert enc.min_a_for_b(s, 0.0) == pytest.approx(1.0)


def test_example1_zero_coupling_condA2():
    for u in (0.0, 5.0, 50.0):
        s = ex.build_example1(ex.Example1Config(8, u=u, w=0.0))
        p = enc.enclosure_params(s, enc.min_a_for_b(s, 0.0), 0.0)
        assert p.condA2 == (s.alpha_minus >= s.delta_plus)


def test_example1_negative_weight():
    with pytest.raises(NegativeWeight):
        ex.build_example1(ex.Example1Config(5, w=-1.0))


def test_profiles():
    s, _ = ex.grid(4)
    np.testing.assert_allclose(ex.evaluate_profile(2.0, s), 2.0)
    np.testing.assert_allclose(ex.evaluate_profile(lambda t: t ** 2, s), s ** 2)
    np.testing.assert_allclose(ex.evaluate_profile({"kind": "step", "left": 1, "right": 3,
                                                    "at": 0.5}, s), [1, 1, 3, 3])
    np.testing.assert_allclose(ex.evaluate_profile({"kind": "sin", "amplitude": 2}, s),
                               2 * np.sin(np.pi * s))
    np.testing.assert_allclose(ex.evaluate_profile([1, 2, 3, 4], s), [1, 2, 3, 4])
    with pytest.raises(InputError):
        ex.evaluate_profile([1, 2], s)
    with pytest.raises(InputError):
        ex.evaluate_profile({"kind": "cubic"}, s)


def test_example2_structure():
    s = ex.build_example2(ex.Example2Config(6, q=10.0, u=0.0, v=0.0))
    assert not s.is_coupled
    s = ex.build_example2(ex.Example2Config(6))
    G = ex.centered_difference(6)
    np.testing.assert_allclose(s.B, G.T)
    np.testing.assert_allclose(s.A, ex.dirichlet_laplacian(6) + 10 * np.eye(6))


def test_centered_difference_dominated_by_laplacian():
    for n in (8, 32, 64):
        G = ex.centered_difference(n)
        L = ex.dirichlet_laplacian(n)
        assert np.linalg.eigvalsh(L - G.T @ G)[0] >= -1e-9 * np.linalg.norm(L, 2)


def test_example2_analytic_pair():
    cfg = ex.Example2Config(64)
    a, b = ex.example2_analytic_pair(cfg)
    assert (a, b) == (-10.0, 1.0)
    s = ex.build_example2(cfg)
    assert enc.min_a_for_b(s, b) <= -10 + 1e-9 * s.norm_A
    p = enc.enclosure_params(s, a, b)
    assert p.condA1
    assert ex.example2_analytic_lower_pair(cfg) == (-10.0, 1.0)


def test_build_named():
    s = ex.build_named("ex1", n=5)
    assert s.n1 == 5
    with pytest.raises(InputError):
        ex.build_named("ex9", n=5)


def test_refine_and_track():
    rows = ex.refine_and_track("ex1", {}, [16, 32], K=3)
    assert [r["n"] for r in rows] == [16, 32]
    for r in rows:
        assert len(r["eigenvalues"]) == 3
        assert min(r["est1_lower_margin"]) >= -1e-8
        assert min(r["est1_upper_margin"]) >= -1e-8
    with pytest.raises(InputError):
        ex.refine_and_track("ex1", {}, [32, 16])


@pytest.mark.parametrize("n", [16, 64, 256])
@pytest.mark.parametrize("name", ["ex1", "ex2"])
def test_suites_on_examples(name, n):
    from jspectra import krein, vareig
    s = ex.build_named(name, n=n)
    a, b, params = enc.optimize_bound(s)
    assert all(enc.in_enclosure(z, params) for z in s.spectrum)
    r = vareig.variational_spectrum(s, params, N=6)
    ref = vareig.oracle_eigenvalues_above(s, r.gamma0)[:6]
    np.testing.assert_allclose(r.eigenvalues, ref, atol=1e-8 * s.norm_M)
    rep = vareig.bounds_report(s, params, r, a, b, enc.max_ahat_for_bhat(s, 0.0), 0.0)
    assert rep.holds()
    if n <= 64:
        assert all(v.positive for v in krein.positive_type_check(s, params))
