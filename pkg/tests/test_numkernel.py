import numpy as np
import pytest

from jspectra import numkernel as nk
from jspectra.errors import EmptyInput, NonSquare, NotSymmetric


def test_sym_eig_diagonal():
    w, Q = nk.sym_eig(np.diag([3.0, 1.0]))
    np.testing.assert_allclose(w, [1.0, 3.0])
    np.testing.assert_allclose(np.abs(Q), [[0, 1], [1, 0]])


def test_sym_eig_two_by_two_closed_form():
    # eigenvalues of [[p, q], [q, p]] are p -+ q
    w = nk.sym_eig([[1.5, 1.0], [1.0, 1.5]]).values
    np.testing.assert_allclose(w, [0.5, 2.5], atol=1e-14)


def test_sym_eig_identity_gives_orthonormal_vectors():
    w, Q = nk.sym_eig(np.eye(4))
    np.testing.assert_allclose(w, np.ones(4))
    np.testing.assert_allclose(Q.T @ Q, np.eye(4), atol=1e-14)


def test_sym_eig_rejects_bad_input():
    with pytest.raises(NonSquare):
        nk.sym_eig(np.ones((2, 3)))
    with pytest.raises(NotSymmetric):
        nk.sym_eig([[1.0, 2.0], [0.0, 1.0]])


def test_check_symmetric_tolerates_roundoff():
    S = np.array([[1.0, 2.0], [2.0 + 1e-15, 1.0]])
    out = nk.check_symmetric(S)
    assert out[0, 1] == out[1, 0]


def test_sym_eig_reconstruction_random():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        n = int(rng.integers(1, 41))
        X = rng.standard_normal((n, n))
        S = (X + X.T) / 2
        w, Q = nk.sym_eig(S)
        assert np.linalg.norm(Q @ np.diag(w) @ Q.T - S, 2) <= 1e-10 * max(nk.norm2(S), 1.0)
        assert np.all(np.diff(w) >= 0)


def test_gen_eig_rotation():
    z = nk.gen_eig([[0.0, 1.0], [-1.0, 0.0]])
    np.testing.assert_allclose(z, [-1j, 1j], atol=1e-15)


def test_gen_eig_quadratic():
    # characteristic polynomial lam^2 - 3 lam + 1
    z = nk.gen_eig([[3.0, 1.0], [-1.0, 0.0]])
    np.testing.assert_allclose(z, [(3 - 5 ** 0.5) / 2, (3 + 5 ** 0.5) / 2], atol=1e-14)
    assert np.all(z.imag == 0)


def test_gen_eig_diagonal_and_empty():
    np.testing.assert_allclose(nk.gen_eig(np.diag([5.0, 2.0])), [2.0, 5.0])
    assert nk.gen_eig(np.zeros((0, 0))).size == 0


def test_gen_eig_matches_sym_eig_on_symmetric_input():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 20))
        X = rng.standard_normal((n, n))
        S = X + X.T
        z = nk.gen_eig(S)
        w = nk.sym_eigvals(S)
        assert np.max(np.abs(z.imag)) <= 1e-10 * nk.norm2(S)
        np.testing.assert_allclose(np.sort(z.real), w, atol=1e-10 * nk.norm2(S))


def test_gen_eig_conjugate_closed():
    rng = np.random.default_rng(8)
    M = rng.standard_normal((9, 9))
    z = nk.gen_eig(M)
    np.testing.assert_allclose(np.sort_complex(z), np.sort_complex(z.conj()), atol=1e-13)


def test_min_singular():
    assert nk.min_singular(np.zeros((3, 3))) == 0.0
    assert nk.min_singular(np.eye(3)) == pytest.approx(1.0)
    assert nk.min_singular([[0.5]]) == pytest.approx(0.5)


def test_negative_count():
    assert nk.negative_count(np.diag([-1.0333, 3.8]), 0.0) == 1
    assert nk.negative_count(np.eye(3), 0.0) == 0
    assert nk.negative_count(np.diag([-1.0, -2.0, 3.0]), 0.0) == 2


def test_negative_count_agrees_with_eigenvalues():
    rng = np.random.default_rng(3)
    for _ in range(200):
        n = int(rng.integers(1, 15))
        X = rng.standard_normal((n, n))
        S = X + X.T
        assert nk.negative_count(S, 0.0) == int(np.sum(nk.sym_eigvals(S) < 0))


def test_orthonormal_basis_reduces_rank():
    v = np.array([1.0, 0.0, 0.0])
    Q = nk.orthonormal_basis([v, 2 * v, np.array([0.0, 1.0, 1.0])])
    assert Q.shape == (3, 2)
    np.testing.assert_allclose(Q.T @ Q, np.eye(2), atol=1e-14)
    # the span contains the inputs
    P = Q @ Q.T
    np.testing.assert_allclose(P @ v, v, atol=1e-14)


def test_orthonormal_basis_empty():
    with pytest.raises(EmptyInput):
        nk.orthonormal_basis([])


def test_orthogonal_complement():
    Q = nk.orthonormal_basis([np.array([1.0, 1.0, 0.0])])
    C = nk.orthogonal_complement(Q)
    assert C.shape == (3, 2)
    np.testing.assert_allclose(Q.T @ C, 0, atol=1e-14)


def test_canonical_sign():
    v = nk.canonical_sign(np.array([0.0, -2.0, 1.0]))
    assert v[1] > 0
