"""Quadratic numerical range: eigenvalues of the compressions ``M_{x,y}``.

For nonzero x, y the compression is the 2x2 matrix
``[[alpha, beta], [-conj(beta), delta]]`` with Rayleigh quotients alpha of A,
delta of D and the normalized coupling beta.  Its eigenvalues are

    lambda_pm = (alpha + delta)/2 +- sqrt(((alpha - delta)/2)^2 - |beta|^2)

where the square root of a negative number t is ``+i sqrt(-t)``.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import scipy.linalg

from .errors import BstarXZero, DimensionTooSmall, LambdaInSpectrumD, ZeroVector
from .model import BlockSystem
from .tolerances import tol


@dataclasses.dataclass(frozen=True)
class QnrPoint:
    lambda_plus: complex
    lambda_minus: complex
    alpha: float
    beta: complex
    delta: float
    x: np.ndarray
    y: np.ndarray

    @property
    def values(self) -> tuple[complex, complex]:
        return self.lambda_plus, self.lambda_minus


def branch_sqrt(t: float) -> complex:
    """Non-negative root for t >= 0, ``i sqrt(-t)`` (positive imaginary part) otherwise."""
    return complex(math.sqrt(t)) if t >= 0 else complex(0.0, math.sqrt(-t))


def roots_from_abd(alpha: float, beta_sq: float, delta: float) -> tuple[complex, complex]:
    mid = (alpha + delta) / 2
    r = branch_sqrt(((alpha - delta) / 2) ** 2 - beta_sq)
    return mid + r, mid - r


def lambda_pm(system: BlockSystem, x, y) -> QnrPoint:
    """Compression eigenvalues for (possibly complex) nonzero x, y."""
    x = np.asarray(x)
    y = np.asarray(y)
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    if nx == 0 or ny == 0:
        raise ZeroVector("x and y must be nonzero")
    alpha = float(np.vdot(x, system.A @ x).real) / nx ** 2
    delta = float(np.vdot(y, system.D @ y).real) / ny ** 2
    beta = complex(np.vdot(y, system.B.T @ x)) / (nx * ny)
    if beta.imag == 0:
        beta = beta.real
    lp, lm = roots_from_abd(alpha, abs(beta) ** 2, delta)
    return QnrPoint(lp, lm, alpha, beta, delta, x, y)


def sample_qnr(system: BlockSystem, count: int, seed: int) -> list[QnrPoint]:
    """Monte-Carlo inner approximation of the QNR from Gaussian test vectors.

    Returns ``count`` points, i.e. ``2*count`` branch values.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((count, system.n1))
    Y = rng.standard_normal((count, system.n2))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    Y /= np.linalg.norm(Y, axis=1, keepdims=True)
    return [lambda_pm(system, x, y) for x, y in zip(X, Y)]


def branch_values(points: list[QnrPoint]) -> np.ndarray:
    """Flatten sampled points into the ``2*count`` branch values."""
    return np.array([v for p in points for v in p.values], dtype=complex)


def embed_WD(system: BlockSystem, y) -> QnrPoint:
    """Point whose compression is diagonal, so ``delta(y)`` is a branch value.

    Picks a unit x orthogonal to ``B y`` (one linear constraint on x).
    """
    if system.n1 < 2:
        raise DimensionTooSmall("need dim of the first component >= 2")
    y = np.asarray(y, dtype=float)
    if not np.any(y):
        raise ZeroVector("y must be nonzero")
    c = system.B @ y
    if np.any(c):
        x = scipy.linalg.null_space(c[None, :])[:, 0]
    else:
        x = np.zeros(system.n1)
        x[0] = 1.0
    return lambda_pm(system, x, y)


def det_identity_check(system: BlockSystem, lam: float, x) -> tuple[float, float]:
    """Both sides of ``det(M_{x,y} - lam) = <B^T x, (D-lam)^{-1} B^T x> s(lam)[x] / (|x|^2 |y|^2)``
    with ``y = (D - lam)^{-1} B^T x``."""
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise ZeroVector("x must be nonzero")
    d = system.spec_D.values
    if np.min(np.abs(d - lam)) <= tol().sep * (1 + system.norm_D):
        raise LambdaInSpectrumD(f"lambda={lam} is (numerically) an eigenvalue of D")
    c = system.BQ.T @ x                       # B^T x in the D-eigenbasis
    if not np.any(c):
        raise BstarXZero("B^T x vanishes")
    yc = c / (d - lam)
    y = system.spec_D.vectors @ yc
    pt = lambda_pm(system, x, y)
    lhs = (pt.alpha - lam) * (pt.delta - lam) + abs(pt.beta) ** 2
    nx2, ny2 = x @ x, yc @ yc
    s_val = x @ system.A @ x - lam * nx2 + c @ yc
    rhs = (c @ yc) * s_val / (nx2 * ny2)
    return float(lhs), float(rhs)
