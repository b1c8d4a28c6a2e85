"""Certificates in the indefinite inner product ``[v, w] = <J v, w>``.

Positive type of an eigenvalue is tested on its invariant subspace: the Gram
matrix of an orthonormal basis in the indefinite inner product must be
positive definite.  Simple eigenvalues use the eigenvector directly;
clusters go through an ordered real Schur decomposition, which also covers
defective eigenvalues.
"""

from __future__ import annotations

import dataclasses

import numpy as np
import scipy.linalg

from . import numkernel as nk
from .enclosure import EnclosureParams
from .errors import DimensionMismatch, GammaOutsideGap, StrictANotSatisfied
from .model import BlockSystem, cluster, signature
from .tolerances import tol


@dataclasses.dataclass(frozen=True)
class PositiveTypeVerdict:
    eigenvalue: float
    multiplicity: int
    min_gram: float
    positive: bool


@dataclasses.dataclass(frozen=True)
class KreinCertificate:
    gamma: float | None
    jm_minus_gamma_psd: bool | None
    min_eig_jm: float | None
    positive_type: list[PositiveTypeVerdict]
    nonreal_count: int


def indefinite_inner(v, w, n1: int) -> float:
    """``v^T J w`` with ``J = diag(I_{n1}, -I_{n2})``."""
    v = np.asarray(v)
    w = np.asarray(w)
    if v.shape != w.shape or v.ndim != 1 or not 0 <= n1 <= v.size:
        raise DimensionMismatch("vectors must have equal length n1 + n2")
    val = np.vdot(w[:n1], v[:n1]) - np.vdot(w[n1:], v[n1:])
    return float(val.real)


def _gram(basis: np.ndarray, n1: int) -> np.ndarray:
    G = basis[:n1].conj().T @ basis[:n1] - basis[n1:].conj().T @ basis[n1:]
    G = 0.5 * (G + G.conj().T)
    return G.real if np.isrealobj(basis) else G


def invariant_subspace(M: np.ndarray, center: float, radius: float) -> np.ndarray:
    """Orthonormal real basis of the invariant subspace for the eigenvalues
    within ``radius`` of the real point ``center``."""
    def select(re, im):
        return (np.abs(re - center) <= radius) & (np.abs(im) <= radius)
    _, Z, sdim = scipy.linalg.schur(M, output="real", sort=select)
    return Z[:, :sdim]


def positive_type_check(system: BlockSystem, params: EnclosureParams) -> list[PositiveTypeVerdict]:
    """Gram-positivity verdict for every real eigenvalue of M above mu."""
    M = system.M
    n1 = system.n1
    scale = max(system.norm_M, 1.0)
    z, V = scipy.linalg.eig(M)
    real = np.abs(z.imag) <= tol().eig * scale
    idx = np.flatnonzero(real & (z.real > params.mu))
    verdicts = []
    for group in cluster(z.real[idx], tol().cluster * scale):
        members = idx[group]
        center = float(np.mean(z.real[members]))
        if len(members) == 1:
            v = V[:, members[0]]
            v = v * np.exp(-1j * np.angle(v[np.argmax(np.abs(v))]))
            basis = (v.real / np.linalg.norm(v.real))[:, None]
        else:
            basis = invariant_subspace(M, center, tol().cluster * scale)
        G = _gram(basis, n1)
        g = nk.sym_eigvals(G)
        gmin = float(g[0])
        norm_G = float(max(abs(g[0]), abs(g[-1])))
        verdicts.append(PositiveTypeVerdict(center, basis.shape[1], gmin,
                                            gmin > tol().psd * norm_G))
    return verdicts


def krein_matrix(system: BlockSystem, gamma: float) -> np.ndarray:
    """The symmetric matrix ``J (M - gamma)``."""
    n1, n2 = system.n1, system.n2
    return np.block([[system.A - gamma * np.eye(n1), system.B],
                     [system.B.T, gamma * np.eye(n2) - system.D]])


def krein_nonneg_check(system: BlockSystem, params: EnclosureParams,
                       gamma: float) -> tuple[bool, float]:
    """Whether ``M - gamma`` is non-negative in the Krein inner product.

    Requires strict condition (A) and gamma inside the gap (mu, mu_+).  The
    verdict also requires gamma to be numerically in the resolvent set.
    """
    if not params.strictA:
        raise StrictANotSatisfied("strict condition (A) does not hold")
    if not params.mu < gamma < params.mu_plus:
        raise GammaOutsideGap(f"gamma={gamma} outside ({params.mu}, {params.mu_plus})")
    w = nk.sym_eigvals(krein_matrix(system, gamma))
    min_eig = float(w[0])
    psd = min_eig >= -tol().psd * max(system.norm_M, 1.0)
    resolvent = np.min(np.abs(system.spectrum - gamma)) > tol().sep * (1 + system.norm_M)
    return bool(psd and resolvent), min_eig


def nonreal_count(system: BlockSystem) -> int:
    z = system.spectrum
    return int(np.count_nonzero(np.abs(z.imag) > tol().eig * max(system.norm_M, 1.0)))


def gap_points(params: EnclosureParams, count: int = 5) -> np.ndarray:
    """``count`` equally spaced interior points of (mu, mu_+)."""
    return np.linspace(params.mu, params.mu_plus, count + 2)[1:-1]


def krein_certificate(system: BlockSystem, params: EnclosureParams,
                      gamma: float | None = None) -> KreinCertificate:
    psd = min_eig = None
    if params.strictA and params.mu_plus is not None and params.mu_plus > params.mu:
        if gamma is None:
            gamma = 0.5 * (params.mu + params.mu_plus)
        psd, min_eig = krein_nonneg_check(system, params, gamma)
    else:
        gamma = None
    return KreinCertificate(gamma, psd, min_eig, positive_type_check(system, params),
                            nonreal_count(system))


def signature_matrix(system: BlockSystem) -> np.ndarray:
    return signature(system.n1, system.n2)
