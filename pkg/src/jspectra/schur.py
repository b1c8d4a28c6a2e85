"""Schur complement ``S(lam) = A - lam + B (D - lam)^{-1} B^T`` and its form.

All resolvents of D are applied in the eigenbasis of D, which keeps S exactly
symmetric and costs one diagonal scaling per evaluation.
"""

from __future__ import annotations

import dataclasses
from typing import NamedTuple

import numpy as np
import scipy.optimize

from . import numkernel as nk
from .enclosure import EnclosureParams
from .errors import (IntervalNotAboveMu, LambdaInSpectrumD, LambdaNotAboveDeltaPlus,
                     NonNegativeC, SingularSchur, TooCloseToSigmaD, ZeroVector)
from .model import BlockSystem
from .tolerances import tol

MAX_ITER = 200
_EPS = np.finfo(float).eps


@dataclasses.dataclass(frozen=True)
class SchurSample:
    lam: float
    S: np.ndarray
    eig: nk.SymEig
    kappa_minus: int


class RayleighValue(NamedTuple):
    """Root of ``lam -> s(lam)[x]`` above mu; ``value is None`` encodes minus infinity."""

    value: float | None
    iterations: int
    bracket: tuple[float, float]

    @property
    def finite(self) -> bool:
        return self.value is not None


def _sep(system: BlockSystem) -> float:
    return tol().sep * (1 + system.norm_D)


def _check_away_from_D(system: BlockSystem, lam) -> None:
    if np.min(np.abs(system.spec_D.values - lam)) <= _sep(system):
        raise TooCloseToSigmaD(f"lambda={lam} is within tol_sep of sigma(D)")


def _check_above_delta_plus(system: BlockSystem, lam: float) -> None:
    if not lam > system.delta_plus + _sep(system):
        raise LambdaNotAboveDeltaPlus(
            f"lambda={lam} must exceed delta_+={system.delta_plus}")


def schur_matrix(system: BlockSystem, lam) -> np.ndarray:
    """``S(lam)``; complex lam gives a complex symmetric matrix."""
    _check_away_from_D(system, lam)
    BQ = system.BQ
    S = system.A - lam * np.eye(system.n1) + (BQ / (system.spec_D.values - lam)) @ BQ.T
    if np.isrealobj(S):
        S = 0.5 * (S + S.T)
    return S


def _kappa_from_values(w: np.ndarray) -> int:
    scale = max(abs(w[0]), abs(w[-1]))
    return int(np.count_nonzero(w < -tol().psd * scale))


def schur_at(system: BlockSystem, lam: float) -> SchurSample:
    S = schur_matrix(system, float(lam))
    eig = nk.sym_eig(S)
    return SchurSample(float(lam), S, eig, _kappa_from_values(eig.values))


def _coupling(system: BlockSystem, x: np.ndarray) -> np.ndarray:
    return system.BQ.T @ x


def s_form(system: BlockSystem, lam: float, x) -> float:
    """``x^T A x - lam |x|^2 - (B^T x)^T (lam - D)^{-1} (B^T x)``."""
    _check_above_delta_plus(system, lam)
    x = np.asarray(x, dtype=float)
    c = _coupling(system, x)
    return float(x @ system.A @ x - lam * (x @ x) - np.sum(c * c / (lam - system.spec_D.values)))


def s_form_deriv(system: BlockSystem, lam: float, x) -> float:
    """``-|x|^2 + |(lam - D)^{-1} B^T x|^2``."""
    _check_above_delta_plus(system, lam)
    x = np.asarray(x, dtype=float)
    c = _coupling(system, x)
    return float(-(x @ x) + np.sum((c / (lam - system.spec_D.values)) ** 2))


class _FormEvaluator:
    """Precomputed pieces of ``s(.)[x]`` for repeated evaluation at one x."""

    def __init__(self, system: BlockSystem, x: np.ndarray):
        self.ax = float(x @ system.A @ x)
        self.xx = float(x @ x)
        self.c2 = _coupling(system, x) ** 2
        self.d = system.spec_D.values
        self.scale = abs(self.ax) + self.xx * (1 + system.norm_A)

    def value(self, lam: float) -> float:
        return self.ax - lam * self.xx - float(np.sum(self.c2 / (lam - self.d)))

    def deriv(self, lam: float) -> float:
        return -self.xx + float(np.sum(self.c2 / (lam - self.d) ** 2))


def lower_evaluation_point(system: BlockSystem, params: EnclosureParams) -> float:
    """``mu + eps_mu``, nudged above ``delta_+`` when mu sits on it."""
    mu = params.mu
    lo = mu + tol().mu_offset * (1 + abs(mu))
    return max(lo, system.delta_plus + 2 * _sep(system))


def lambda_cap(system: BlockSystem, params: EnclosureParams, gamma0: float | None = None) -> float:
    """Point beyond which every eigencurve of S is negative."""
    start = system.alpha_minus if gamma0 is None else max(gamma0, system.alpha_minus)
    return start + 10 * (1 + system.norm_A + abs(params.a) + params.b * system.norm_A)


def rayleigh_p(system: BlockSystem, params: EnclosureParams, x) -> RayleighValue:
    """Generalized Rayleigh functional: the zero of ``s(.)[x]`` in (mu, inf)."""
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise ZeroVector("x must be nonzero")
    f = _FormEvaluator(system, x)
    lo = lower_evaluation_point(system, params)
    f_lo = f.value(lo)
    if f_lo < 0:
        return RayleighValue(None, 0, (lo, lo))
    if f_lo == 0:
        return RayleighValue(lo, 0, (lo, lo))

    # s(.)[x] -> -inf, so doubling the step finds a sign change
    step = 1 + abs(lo)
    hi = lo + step
    it = 0
    while f.value(hi) >= 0:
        lo, step = hi, 2 * step
        hi = lo + step
        it += 1
        if it > MAX_ITER:
            raise nk.NoConvergence("could not bracket the Rayleigh root")
    return _safeguarded_newton(f, lo, hi, it)


def _safeguarded_newton(f: _FormEvaluator, lo: float, hi: float, it: int) -> RayleighValue:
    lam = 0.5 * (lo + hi)
    for k in range(it, it + MAX_ITER):
        v = f.value(lam)
        if abs(v) <= tol().root * f.xx * (1 + abs(lam)):
            return RayleighValue(lam, k + 1, (lo, hi))
        if v > 0:
            lo = lam
        else:
            hi = lam
        if hi - lo <= 4 * _EPS * (1 + abs(lam)):
            return RayleighValue(0.5 * (lo + hi), k + 1, (lo, hi))
        d = f.deriv(lam)
        nxt = lam - v / d if d < 0 else None
        if nxt is None or not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        lam = nxt
    raise nk.NoConvergence("Rayleigh root iteration hit the iteration cap")


def kappa_minus(system: BlockSystem, gamma: float) -> int:
    _check_above_delta_plus(system, gamma)
    return _kappa_from_values(nk.sym_eigvals(schur_matrix(system, gamma)))


def vm_g(params: EnclosureParams, lam):
    dp, a, b = params.delta_plus, params.a, params.b
    return -1 + (b * lam + a) / ((lam - dp) * (lam - dp - b))


def vm_h(params: EnclosureParams, lam):
    dp, b = params.delta_plus, params.b
    return b / ((lam - dp) * (lam - dp - b))


def vm_constants(system: BlockSystem, params: EnclosureParams,
                 interval: tuple[float, float]) -> tuple[float, float]:
    """Constants (eps, delta) of the monotonicity condition on a compact interval.

    Whenever ``|s(lam)[x]| <= eps |x|^2`` with lam in the interval,
    ``s'(lam)[x] <= -delta |x|^2``.  The maximum c of the auxiliary function
    g is certified numerically (grid of 1024 points plus bounded scalar
    refinement around the best grid cell).
    """
    lo, hi = map(float, interval)
    if not (lo > params.mu and hi >= lo):
        raise IntervalNotAboveMu(f"interval {interval} must lie in (mu, inf) with mu={params.mu}")
    grid = np.linspace(lo, hi, 1026)
    g = vm_g(params, grid)
    k = int(np.argmax(g))
    c = float(g[k])
    if hi > lo:
        left, right = grid[max(k - 1, 0)], grid[min(k + 1, grid.size - 1)]
        res = scipy.optimize.minimize_scalar(lambda t: -vm_g(params, t), bounds=(left, right),
                                             method="bounded", options={"xatol": 1e-10})
        c = max(c, float(-res.fun))
    if not c < 0:
        raise NonNegativeC(f"max of g on {interval} is {c} >= 0")
    delta = -c / 2
    h_max = float(np.max(vm_h(params, grid)))
    if h_max > 0:
        eps = delta / h_max
    else:
        # b = 0: the implication holds for every x, any eps works
        eps = 1.0 + system.norm_A + abs(params.a)
    return eps, delta


def resolvent_blocks(system: BlockSystem, lam) -> np.ndarray:
    """``(M - lam)^{-1}`` assembled from the Schur complement.

    Top row ``[S^{-1}, -S^{-1} B (D-lam)^{-1}]``, bottom row
    ``[F, (D-lam)^{-1} - F B (D-lam)^{-1}]`` with ``F = (D-lam)^{-1} B^T S^{-1}``.
    """
    d = system.spec_D.values
    if np.min(np.abs(d - lam)) <= _sep(system):
        raise LambdaInSpectrumD(f"lambda={lam} is within tol_sep of sigma(D)")
    S = schur_matrix(system, lam)
    s_min = nk.min_singular(S)
    if s_min <= tol().eig * max(nk.norm2(S), 1.0):
        raise SingularSchur(f"S(lambda) is numerically singular at lambda={lam}")
    Q = system.spec_D.vectors
    Dinv = (Q / (d - lam)) @ Q.T
    S_inv = np.linalg.inv(S)
    F = Dinv @ system.B.T @ S_inv
    BDinv = system.B @ Dinv
    return np.block([[S_inv, -S_inv @ BDinv], [F, Dinv - F @ BDinv]])


def singularity_ratio(system: BlockSystem, z: float) -> float:
    """``sigma_min(S(z))`` relative to the size of S(z).

    The size is ``||S(z)||`` when n1 >= 2.  For n1 = 1 the norm coincides
    with sigma_min, so the magnitude of the summands,
    ``||A|| + |z| + ||B||^2 / dist(z, sigma(D))``, is used instead.
    """
    S = schur_matrix(system, z)
    if system.n1 >= 2:
        scale = nk.norm2(S)
    else:
        dist = float(np.min(np.abs(system.spec_D.values - z)))
        scale = system.norm_A + abs(z) + system.norm_B ** 2 / dist
    s_min = nk.min_singular(S)
    return s_min / scale if scale > 0 else (0.0 if s_min == 0 else np.inf)


def schur_nullity(S: np.ndarray, radius: float) -> int:
    w = nk.sym_eigvals(S)
    return int(np.count_nonzero(np.abs(w) <= radius))


def lift_kernel_vector(system: BlockSystem, z: float, x) -> np.ndarray:
    """``(x, (D - z)^{-1} B^T x)``, an eigenvector of M when x spans ker S(z)."""
    x = np.asarray(x, dtype=float)
    Q, d = system.spec_D.vectors, system.spec_D.values
    y = Q @ ((Q.T @ (system.B.T @ x)) / (d - z))
    return np.concatenate([x, y])

