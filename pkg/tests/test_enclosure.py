import math

import numpy as np
import pytest

from jspectra import build_system, enclosure_params, in_enclosure, optimize_bound
from jspectra import enclosure as enc
from jspectra.errors import EmptyGrid, InvalidBound

from _systems import random_condA_system, random_system, sys1, sys2

SYS0 = build_system([[0.0]], [[1.0]], [[0.0]])


def test_min_a_for_b_fixtures():
    assert enc.min_a_for_b(sys1(), 0.0) == pytest.approx(1.0)
    assert enc.min_a_for_b(sys2(), 0.0) == pytest.approx(1.0)
    dec = build_system(np.diag([2.0, 3.0]), np.zeros((2, 1)), [[0.0]])
    assert enc.min_a_for_b(dec, 0.7) == pytest.approx(-0.7 * 2.0)


def test_max_ahat_for_bhat_fixtures():
    assert enc.max_ahat_for_bhat(sys1(), 0.0) == pytest.approx(1.0)
    assert enc.max_ahat_for_bhat(sys2(), 0.0) == pytest.approx(0.0, abs=1e-15)
    dec = build_system(np.diag([2.0, 3.0]), np.zeros((2, 1)), [[0.0]])
    assert enc.max_ahat_for_bhat(dec, 0.0) == 0.0


def test_negative_b_rejected():
    with pytest.raises(InvalidBound):
        enc.min_a_for_b(sys1(), -1.0)


def test_min_a_for_b_is_sound_on_random_vectors():
    rng = np.random.default_rng(21)
    for _ in range(500):
        s = random_system(rng)
        b = float(rng.uniform(0, 2))
        a = enc.min_a_for_b(s, b)
        X = rng.standard_normal((200, s.n1))
        lhs = np.sum((X @ s.B) ** 2, axis=1)
        rhs = a * np.sum(X * X, axis=1) + b * np.einsum("ij,jk,ik->i", X, s.A, X)
        assert np.all(lhs <= rhs + 1e-9 * (1 + s.norm_A + s.norm_B ** 2) * np.sum(X * X, axis=1))


def test_params_sys1():
    p = enclosure_params(sys1(), 1.0, 0.0)
    assert p.condA2 and not p.condA1 and p.condA and p.strictA
    assert (p.mu, p.mu_plus, p.mu_minus) == (1.0, 2.0, 0.0)
    assert (p.xi1, p.xi2, p.xi_minus, p.eta) == (2.0, 1.5, 2.0, 0.0)


def test_params_sys0():
    p = enclosure_params(SYS0, 1.0, 0.0)
    assert not p.condA and p.mu_plus is None
    assert (p.mu, p.eta, p.xi1, p.xi2, p.xi_minus, p.mu_minus) == (1.0, 1.0, -1.0, 0.0, 0.0, 0.0)


def test_params_sys2():
    p = enclosure_params(sys2(), 1.0, 0.0)
    assert not p.condA
    assert p.mu == 1.0
    assert p.eta == pytest.approx(0.75 ** 0.5, abs=1e-15)
    assert p.xi_minus == 0.5


def test_params_reject_invalid_pair():
    # a below the minimal admissible value for b = 0 is not a relative bound
    with pytest.raises(InvalidBound):
        enclosure_params(sys1(), 0.5, 0.0)


def test_eta_zero_iff_condA_and_ordering():
    rng = np.random.default_rng(4)
    for i in range(300):
        s = random_condA_system(rng) if i % 2 else random_system(rng)
        b = float(rng.choice([0.0, 0.1, 1.0]))
        p = enclosure_params(s, enc.min_a_for_b(s, b), b)
        assert (p.eta == 0) == p.condA
        if p.condA and s.is_coupled:
            assert s.delta_plus < p.mu <= p.mu_plus <= s.alpha_minus + 1e-12


def test_in_enclosure_sys1_and_sys0():
    p1 = enclosure_params(sys1(), 1.0, 0.0)
    assert in_enclosure((3 - 5 ** 0.5) / 2, p1)
    assert not in_enclosure(1.5, p1)
    assert in_enclosure(2.0, p1) and in_enclosure(10.0, p1)
    assert not in_enclosure(2.0 + 0.1j, p1)
    p0 = enclosure_params(SYS0, 1.0, 0.0)
    assert in_enclosure(1j, p0) and in_enclosure(-1j, p0)
    assert not in_enclosure(1.1j, p0)
    assert not in_enclosure(-0.5, p0)


def test_enclosure_margin_sign_matches_membership():
    rng = np.random.default_rng(6)
    for _ in range(200):
        s = random_system(rng, 6)
        p = enc.optimize_bound(s).params
        for z in rng.normal(scale=3, size=10) + 1j * rng.normal(scale=1, size=10):
            m = enc.enclosure_margin(z, p)
            if m > 1e-6:
                assert in_enclosure(z, p)
            if m < -1e-6:
                assert not in_enclosure(z, p)


def test_optimize_bound_sys1_grid():
    # candidates: b=0 -> a=1, gap (1, 2); b=0.5 -> a=-0.5, gap (0.5, 2.5);
    # b=1 -> a=-2, gap (1, 2).  The widest gap wins.
    a, b, p = optimize_bound(sys1(), [0.0, 0.5, 1.0])
    assert (a, b) == pytest.approx((-0.5, 0.5))
    assert p.condA1 and p.condA2
    assert (p.mu, p.mu_plus) == pytest.approx((0.5, 2.5))
    gaps = [enclosure_params(sys1(), enc.min_a_for_b(sys1(), bb), bb).gap for bb in (0, .5, 1)]
    assert gaps == pytest.approx([1.0, 2.0, 1.0])


def test_optimize_bound_is_order_independent():
    rng = np.random.default_rng(9)
    s = random_system(rng)
    g = enc.default_b_grid(s)
    assert optimize_bound(s, g)[:2] == optimize_bound(s, g[::-1])[:2]


def test_optimize_bound_sys0_and_decoupled():
    a, b, p = optimize_bound(SYS0, [0.0])
    assert (a, b, p.condA) == (1.0, 0.0, False)
    dec = build_system(np.diag([2.0, 4.0]), np.zeros((2, 1)), [[1.0]])
    a, b, p = optimize_bound(dec, [0.0, 0.5])
    assert a == pytest.approx(-b * 2.0) and p.condA


def test_optimize_bound_empty_grid():
    with pytest.raises(EmptyGrid):
        optimize_bound(sys1(), [-1.0])


def test_mu_monotone_in_a_and_b():
    s = sys2()
    for b in (0.0, 0.3, 1.0):
        a = enc.min_a_for_b(s, b)
        m0 = enclosure_params(s, a, b).mu
        assert enclosure_params(s, a + 0.5, b).mu >= m0
        assert enclosure_params(s, a + 1.0, b + 0.5).mu >= m0


def test_nott_bound_cases():
    assert enc.nott_bound(1, 0, 1, 0) == (True, 1.0)
    ok, val = enc.nott_bound(1, 0, 3, 0)
    assert not ok and math.isnan(val)
    ok, val = enc.nott_bound(2.0, 0.5, 1.3, 1.3)
    assert ok and 0 <= val


def test_bounded_coupling_corollary():
    rng = np.random.default_rng(12)
    hits = 0
    for _ in range(300):
        s = random_condA_system(rng, margin=1.0)
        ends = enc.bounded_coupling_intervals(s)
        if ends is None:
            continue
        hits += 1
        lo, hi = ends
        z = s.spectrum
        real = z[np.abs(z.imag) <= 1e-10 * s.norm_M].real
        slack = 1e-9 * (1 + s.norm_M)
        assert np.all((real <= lo + slack) | (real >= hi - slack))
    assert hits > 100


def test_boundary_description():
    p = enclosure_params(sys2(), 1.0, 0.0)
    bd = enc.enclosure_boundary(p, 10.0)
    assert bd["box"][0] == [0.5, -(0.75 ** 0.5)]
    assert bd["intervals"] == [[0.0, 10.0]]


def test_default_grid_finite_for_subnormal_A():
    s = build_system([[1.1e-308]], [[1.0]], [[0.0]])
    assert all(math.isfinite(b) for b in enc.default_b_grid(s))
    optimize_bound(s)
