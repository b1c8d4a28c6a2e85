"""Dense linear-algebra backbone.

Thin contracts over LAPACK (via scipy.linalg): every caller gets ascending
symmetric spectra, conjugate-closed general spectra in a deterministic order,
and consistent error types.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np
import scipy.linalg

from .errors import EmptyInput, NoConvergence, NonSquare, NotSymmetric
from .tolerances import tol


class SymEig(NamedTuple):
    values: np.ndarray   # ascending
    vectors: np.ndarray  # orthonormal columns


def _square(M, name="matrix") -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NonSquare(f"{name} must be square, got shape {M.shape}")
    return M


def check_symmetric(S, name="matrix") -> np.ndarray:
    """Return ``S`` as a float array, symmetrized, after the symmetry check."""
    S = _square(S, name).astype(float)
    scale = np.linalg.norm(S)
    if np.linalg.norm(S - S.T) > tol().sym * scale:
        raise NotSymmetric(f"{name} is not symmetric within tol_sym")
    return 0.5 * (S + S.T)


def sym_eig(S) -> SymEig:
    S = check_symmetric(S)
    if S.shape[0] == 0:
        return SymEig(np.zeros(0), np.zeros((0, 0)))
    try:
        w, Q = scipy.linalg.eigh(S)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return SymEig(w, Q)


def sym_eigvals(S) -> np.ndarray:
    """Ascending eigenvalues only; skips the symmetry check (internal use)."""
    try:
        return scipy.linalg.eigvalsh(0.5 * (S + S.T))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def sort_complex(z) -> np.ndarray:
    """Order by real part, then imaginary part (deterministic report order)."""
    z = np.asarray(z, dtype=complex)
    return z[np.lexsort((z.imag, z.real))]


def gen_eig(M) -> np.ndarray:
    """All eigenvalues of a real square matrix, with multiplicity.

    Complex pairs are symmetrized so that the multiset is exactly closed
    under conjugation.
    """
    M = _square(M)
    if M.shape[0] == 0:
        return np.zeros(0, dtype=complex)
    try:
        z = scipy.linalg.eigvals(M.astype(float))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return _conjugate_close(sort_complex(z))


def _conjugate_close(z: np.ndarray) -> np.ndarray:
    # LAPACK already emits exact pairs for real input; this only removes
    # sign noise on imaginary parts of values it returns as real.
    z = z.copy()
    z.imag[z.imag == 0] = 0.0
    return z


def min_singular(M) -> float:
    M = _square(M)
    if M.shape[0] == 0:
        return 0.0
    return float(scipy.linalg.svdvals(M).min())


def norm2(M) -> float:
    """Spectral norm (0 for empty input)."""
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def negative_count(S, cutoff: float | None = None) -> int:
    """Number of eigenvalues of the symmetric ``S`` strictly below ``cutoff``.

    The default cutoff ``-tol_psd * ||S||`` ignores roundoff-level negatives.
    """
    S = check_symmetric(S)
    if S.shape[0] == 0:
        return 0
    w = sym_eigvals(S)
    if cutoff is None:
        cutoff = -tol().psd * max(abs(w[0]), abs(w[-1]))
    return int(np.count_nonzero(w < cutoff))


def orthonormal_basis(V: Sequence[np.ndarray] | np.ndarray) -> np.ndarray:
    """Orthonormal basis (as columns) of the span of the given vectors.

    A 2-D array is read column-wise; a list is read as a list of vectors.
    """
    if isinstance(V, np.ndarray) and V.ndim == 2:
        cols = V
    else:
        vecs = [np.asarray(v) for v in V]
        if not vecs:
            raise EmptyInput("need at least one vector")
        if len({v.shape for v in vecs}) != 1:
            raise ValueError("vectors must have equal dimension")
        cols = np.column_stack(vecs)
    if cols.size == 0:
        raise EmptyInput("need at least one non-empty vector")
    return scipy.linalg.orth(cols)


def orthogonal_complement(Q: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the complement of the column span of ``Q``."""
    n, m = Q.shape
    if m == 0:
        return np.eye(n)
    return scipy.linalg.null_space(Q.T)


def canonical_sign(v: np.ndarray) -> np.ndarray:
    """Flip ``v`` so its first entry of significant size is positive."""
    v = np.asarray(v)
    big = np.flatnonzero(np.abs(v) > 1e-12 * np.abs(v).max()) if v.size else []
    if len(big) and v[big[0]].real < 0:
        return -v
    return v
