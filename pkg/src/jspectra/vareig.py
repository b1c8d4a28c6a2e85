"""Variational eigenvalues of M above mu.

The n-th eigenvalue of M in ``[gamma0, inf)`` is the unique zero of the
eigencurve ``lam -> rho_{kappa+n}(lam)``, where ``rho_j(lam)`` is the j-th
smallest eigenvalue of ``S(lam)`` and ``kappa`` counts the negative
eigenvalues of ``S(gamma0)``.  Eigencurves cross zero only downwards above
mu, so the zero is found by a Rayleigh-functional iteration kept inside a
sign-change bracket.  The min-max characterizations are checked through
projected eigencurves: on a subspace with orthonormal basis V, the largest
(smallest) value of p equals the zero of ``lam_max(V^T S(lam) V)``
(``lam_min``).
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import scipy.optimize

from . import numkernel as nk
from . import qnr
from . import schur
from .enclosure import EnclosureParams
from .errors import (IndexExceedsNu, IndexOutOfRange, InputError, MaxIterations,
                     NoEigenvalue, NotOrthonormal)
from .model import BlockSystem, cluster, real_eigenvalues
from .tolerances import tol

_EPS = np.finfo(float).eps


@dataclasses.dataclass(frozen=True)
class VarEigResult:
    gamma0: float
    kappa: int
    eigenvalues: np.ndarray
    eigenvectors_x: list[np.ndarray]
    converged: list[bool]
    iterations: list[int]

    @property
    def count(self) -> int:
        return len(self.eigenvalues)


@dataclasses.dataclass(frozen=True)
class BoundReport:
    nu: np.ndarray
    kappa: int
    eigenvalues: np.ndarray
    est1_lower: np.ndarray
    est1_upper: np.ndarray
    est2_upper: list[float | None]
    discriminant: np.ndarray
    discr_ok: bool
    asym_residual: np.ndarray

    def margins(self) -> dict[str, list[float | None]]:
        """Signed margins per n (positive = inequality satisfied)."""
        lam = self.eigenvalues
        return {
            "est1_lower": list(lam - self.est1_lower),
            "est1_upper": list(self.est1_upper - lam),
            "est2_upper": [None if u is None else u - l for u, l in zip(self.est2_upper, lam)],
        }

    def holds(self, tolerance: float | None = None) -> bool:
        t = tol().cmp if tolerance is None else tolerance
        vals = [m for ms in self.margins().values() for m in ms if m is not None]
        return self.discr_ok and all(m >= -t for m in vals)


def default_gamma0(params: EnclosureParams) -> float:
    """Midpoint of the gap under strict condition (A) (then kappa = 0),
    otherwise a small offset above mu."""
    if params.strictA and params.mu_plus is not None and params.mu_plus > params.mu:
        return 0.5 * (params.mu + params.mu_plus)
    return params.mu + 0.01 * (1 + abs(params.mu))


def eigencurve(system: BlockSystem, j: int, lam: float) -> tuple[float, np.ndarray]:
    """j-th ascending eigenvalue of ``S(lam)`` (1-based) and its unit eigenvector."""
    if not 1 <= j <= system.n1:
        raise IndexOutOfRange(f"eigencurve index {j} outside 1..{system.n1}")
    schur._check_above_delta_plus(system, lam)
    rho, x, _ = _curve(system, j, lam)
    return rho, x


def _curve(system: BlockSystem, j: int, lam: float) -> tuple[float, np.ndarray, float]:
    w, Q = nk.sym_eig(schur.schur_matrix(system, lam))
    # ||S|| can vanish at the root (n1 = 1); floor the scale by the data size
    scale = max(abs(w[0]), abs(w[-1]), 1 + abs(lam) + system.norm_A)
    return float(w[j - 1]), nk.canonical_sign(Q[:, j - 1]), float(scale)


@dataclasses.dataclass(frozen=True)
class _Solve:
    lam: float
    x: np.ndarray
    iterations: int
    converged: bool


def _solve(system: BlockSystem, params: EnclosureParams, gamma0: float, j: int) -> _Solve:
    cap = schur.lambda_cap(system, params, gamma0)
    rho_cap, _, _ = _curve(system, j, cap)
    if rho_cap >= 0:
        raise NoEigenvalue(f"eigencurve {j} does not change sign below {cap}")
    lo, hi = gamma0, cap
    lam = gamma0
    for it in range(1, schur.MAX_ITER + 1):
        rho, x, scale = _curve(system, j, lam)
        if rho == 0:
            return _Solve(lam, x, it, True)
        # eigenvalues of S(lam) carry an absolute error of a few eps ||S||,
        # and the eigencurve slope is at most -1, so this is the attainable step
        step_tol = max(tol().root * (1 + abs(lam)), 4 * _EPS * scale)
        p = schur.rayleigh_p(system, params, x).value
        if p is not None and abs(rho) <= tol().eig * scale and abs(p - lam) <= step_tol:
            return _Solve(p, x, it, True)
        if rho > 0:
            lo = max(lo, lam)
        else:
            hi = min(hi, lam)
        if hi - lo <= step_tol:
            mid = 0.5 * (lo + hi)
            rho_mid, x_mid, scale_mid = _curve(system, j, mid)
            return _Solve(mid, x_mid, it, abs(rho_mid) <= tol().eig * scale_mid)
        if p is not None and lo - step_tol <= p <= hi + step_tol:
            lam = min(max(p, lo), hi)
        else:
            lam = 0.5 * (lo + hi)
    raise MaxIterations(f"eigencurve {j} root not found in {schur.MAX_ITER} iterations")


def _check_gamma0(system: BlockSystem, params: EnclosureParams, gamma0: float) -> None:
    if not gamma0 > params.mu:
        raise InputError(f"gamma0={gamma0} must exceed mu={params.mu}")
    schur._check_above_delta_plus(system, gamma0)


def solve_eigenvalue(system: BlockSystem, params: EnclosureParams, gamma0: float,
                     n: int, kappa: int | None = None) -> tuple[float, np.ndarray]:
    """n-th eigenvalue of M in ``[gamma0, inf)`` and the x-component eigenvector."""
    _check_gamma0(system, params, gamma0)
    if kappa is None:
        kappa = schur.kappa_minus(system, gamma0)
    if n < 1 or kappa + n > system.n1:
        raise NoEigenvalue(f"kappa + n = {kappa + n} exceeds dim = {system.n1}")
    s = _solve(system, params, gamma0, kappa + n)
    return s.lam, s.x


def variational_spectrum(system: BlockSystem, params: EnclosureParams,
                         gamma0: float | None = None, N: int | None = None) -> VarEigResult:
    """All (or the first N) eigenvalues of M in ``[gamma0, inf)``, ascending."""
    if gamma0 is None:
        gamma0 = default_gamma0(params)
    _check_gamma0(system, params, gamma0)
    kappa = schur.kappa_minus(system, gamma0)
    available = system.n1 - kappa
    N = available if N is None else min(N, available)
    sols = [_solve(system, params, gamma0, kappa + n) for n in range(1, N + 1)]
    order = np.argsort([s.lam for s in sols], kind="stable")
    sols = [sols[i] for i in order]
    return VarEigResult(
        gamma0=float(gamma0), kappa=kappa,
        eigenvalues=np.array([s.lam for s in sols]),
        eigenvectors_x=[s.x for s in sols],
        converged=[s.converged for s in sols],
        iterations=[s.iterations for s in sols])


def oracle_eigenvalues_above(system: BlockSystem, gamma0: float) -> np.ndarray:
    """Sorted real eigenvalues of M (dense eigensolve) in ``(gamma0, inf)``."""
    r = real_eigenvalues(system)
    return r[r > gamma0]


def compare_with_oracle(system: BlockSystem, result: VarEigResult) -> tuple[bool, float]:
    """Match computed eigenvalues against the dense oracle.

    Returns (counts and cluster multiplicities agree, max abs deviation).
    """
    ref = oracle_eigenvalues_above(system, result.gamma0)
    got = np.sort(result.eigenvalues)
    if ref.size != got.size:
        return False, math.inf
    if ref.size == 0:
        return True, 0.0
    radius = tol().cluster * max(system.norm_M, 1.0)
    same = ([len(c) for c in cluster(ref, radius)] == [len(c) for c in cluster(got, radius)])
    return same, float(np.max(np.abs(ref - got)))


# --- projected eigencurves -------------------------------------------------

class _Projected:
    def __init__(self, system: BlockSystem, V: np.ndarray):
        V = np.asarray(V, dtype=float)
        if V.ndim != 2 or V.shape[0] != system.n1 or V.shape[1] < 1:
            raise NotOrthonormal("V must be an n1 x m matrix with m >= 1")
        if np.linalg.norm(V.T @ V - np.eye(V.shape[1])) > 1e-8:
            raise NotOrthonormal("columns of V are not orthonormal")
        self.VAV = V.T @ system.A @ V
        self.VB = V.T @ system.BQ
        self.d = system.spec_D.values
        self.m = V.shape[1]

    def values(self, lam: float) -> np.ndarray:
        S = self.VAV - lam * np.eye(self.m) + (self.VB / (self.d - lam)) @ self.VB.T
        return nk.sym_eigvals(S)


def _projected_root(system: BlockSystem, params: EnclosureParams, V, pick) -> float | None:
    P = _Projected(system, V)
    f = lambda lam: float(pick(P.values(lam)))  # noqa: E731
    lo = schur.lower_evaluation_point(system, params)
    f_lo = f(lo)
    if f_lo < 0:
        return None
    if f_lo == 0:
        return lo
    hi = schur.lambda_cap(system, params)
    for _ in range(60):
        if f(hi) < 0:
            break
        hi = lo + 2 * (hi - lo)
    else:
        raise NoEigenvalue("projected eigencurve does not change sign")
    return float(scipy.optimize.brentq(f, lo, hi, xtol=1e-13, rtol=4 * _EPS, maxiter=500))


def subspace_max_p(system: BlockSystem, params: EnclosureParams, V) -> float | None:
    """``max p(x)`` over the span of the orthonormal columns of V (None = minus infinity)."""
    return _projected_root(system, params, V, lambda w: w[-1])


def subspace_min_p(system: BlockSystem, params: EnclosureParams, V) -> float | None:
    """``inf p(x)`` over the span of V; None when it is at most ``mu + eps_mu``."""
    return _projected_root(system, params, V, lambda w: w[0])


@dataclasses.dataclass
class WitnessReport:
    n: int
    kappa: int
    lambda_n: float
    trials: int
    violations: list[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_subspace(rng: np.random.Generator, n1: int, m: int) -> np.ndarray:
    return nk.orthonormal_basis(rng.standard_normal((n1, m)))


def minmax_witness_check(system: BlockSystem, params: EnclosureParams, gamma0: float,
                         n: int, trials: int, seed: int) -> WitnessReport:
    """Check both min-max equalities for the n-th eigenvalue by sampling subspaces.

    (i) every random (kappa+n)-dim subspace has ``max p >= lambda_n``;
    (ii) the span of the kappa+n lowest eigenvectors of ``S(lambda_n)``
    attains ``max p <= lambda_n``; (iii) every random (kappa+n-1)-dim L has
    ``inf_{x perp L} p <= lambda_n``; (iv) L spanned by the kappa+n-1 lowest
    eigenvectors attains ``inf >= lambda_n``.
    """
    kappa = schur.kappa_minus(system, gamma0)
    lam_n, _ = solve_eigenvalue(system, params, gamma0, n, kappa)
    k = kappa + n
    t = tol().cmp
    rep = WitnessReport(n, kappa, lam_n, trials)
    rng = np.random.default_rng(seed)
    Q = nk.sym_eig(schur.schur_matrix(system, lam_n)).vectors

    for i in range(trials):
        mp = subspace_max_p(system, params, _random_subspace(rng, system.n1, k))
        if mp is None or mp < lam_n - t:
            rep.violations.append(f"(i) trial {i}: max p = {mp} < lambda_n = {lam_n}")
    mp = subspace_max_p(system, params, Q[:, :k])
    if mp is not None and mp > lam_n + t:
        rep.violations.append(f"(ii) attaining subspace: max p = {mp} > lambda_n = {lam_n}")

    for i in range(trials):
        if k - 1 == 0:
            W = np.eye(system.n1)
        else:
            W = nk.orthogonal_complement(_random_subspace(rng, system.n1, k - 1))
        ip = subspace_min_p(system, params, W)
        if ip is not None and ip > lam_n + t:
            rep.violations.append(f"(iii) trial {i}: inf p = {ip} > lambda_n = {lam_n}")
    ip = subspace_min_p(system, params, Q[:, k - 1:])
    if ip is None or ip < lam_n - t:
        rep.violations.append(f"(iv) attaining constraint: inf p = {ip} < lambda_n = {lam_n}")
    return rep


@dataclasses.dataclass
class LambdaPlusReport:
    samples: int
    finite: int
    max_rel_gap: float          # |lambda_+(x, y*) - p(x)| / max(1, |p(x)|)
    min_margin: float           # min over sampled y of Re lambda_+(x, y) - p(x)
    violations: list[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def optimal_y(system: BlockSystem, x, lam: float) -> np.ndarray:
    """``(D - lam)^{-1} B^T x``, or a unit vector when ``B^T x = 0``."""
    y = schur.lift_kernel_vector(system, lam, x)[system.n1:]
    if not np.any(y):
        y = system.spec_D.vectors[:, -1].copy()
    return y


def lambda_plus_minmax_check(system: BlockSystem, params: EnclosureParams, gamma0: float,
                             n: int, trials: int, seed: int, y_samples: int = 100,
                             rel_tol: float = 1e-10) -> LambdaPlusReport:
    """Check ``inf_y lambda_+(x, y) = p(x)``, attained at ``y* = (D - p)^{-1} B^T x``.

    Samples ``trials`` random x plus the eigencurve vector of lambda_n.  For
    x with p(x) = -inf the witness ``y`` at ``mu + eps_mu`` must give
    ``Re lambda_+ <= mu + eps_mu``.
    """
    lam_n, x_n = solve_eigenvalue(system, params, gamma0, n)
    rng = np.random.default_rng(seed)
    xs = [x_n] + list(rng.standard_normal((trials, system.n1)))
    t = tol().cmp
    rep = LambdaPlusReport(len(xs), 0, 0.0, math.inf)
    lo = schur.lower_evaluation_point(system, params)
    p_n = schur.rayleigh_p(system, params, x_n).value
    if p_n is None or abs(p_n - lam_n) > t:
        rep.violations.append(f"p(x_n) = {p_n} does not reproduce lambda_n = {lam_n}")
    for i, x in enumerate(xs):
        p = schur.rayleigh_p(system, params, x).value
        ys = list(rng.standard_normal((y_samples, system.n2)))
        if p is None:
            y_w = optimal_y(system, x, lo)
            best = min(qnr.lambda_pm(system, x, y).lambda_plus.real for y in [y_w] + ys)
            if best > lo + t:
                rep.violations.append(f"x#{i}: p=-inf but inf Re lambda_+ = {best} > mu")
            continue
        rep.finite += 1
        y_star = optimal_y(system, x, p)
        lp = qnr.lambda_pm(system, x, y_star).lambda_plus
        gap = abs(lp - p) / max(1.0, abs(p))
        rep.max_rel_gap = max(rep.max_rel_gap, gap)
        if gap > rel_tol:
            rep.violations.append(f"x#{i}: lambda_+(x, y*) = {lp} != p(x) = {p}")
        for y in ys:
            pt = qnr.lambda_pm(system, x, y)
            margin = pt.lambda_plus.real - p
            rep.min_margin = min(rep.min_margin, margin)
            if margin < -t or abs(pt.lambda_plus.imag) > t:
                rep.violations.append(f"x#{i}: lambda_+(x, y) = {pt.lambda_plus} beats p(x) = {p}")
    return rep


# --- eigenvalue bounds -----------------------------------------------------

def bounds_report(system: BlockSystem, params: EnclosureParams, result: VarEigResult,
                  a: float, b: float, a_hat: float, b_hat: float) -> BoundReport:
    """Two-sided bounds of each lambda_n against ``nu_{kappa+n}`` (eigenvalues of A)."""
    nu_all = system.spec_A.values
    k = result.kappa
    N = result.count
    if k + N > system.n1:
        raise IndexExceedsNu(f"kappa + N = {k + N} exceeds the number of eigenvalues of A")
    nu = nu_all[k:k + N]
    dp, dm = system.delta_plus, system.delta_minus
    lower = (nu + dp) / 2 + np.sqrt(np.maximum(((nu - dp) / 2) ** 2 - b * nu - a, 0.0))
    disc = ((nu - dm) / 2) ** 2 - b_hat * nu - a_hat
    floor = -tol().psd * (1 + np.abs(nu) ** 2)
    discr_ok = bool(np.all(disc >= floor))
    est2 = [float((v + dm) / 2 + math.sqrt(max(q, 0.0))) if q >= f else None
            for v, q, f in zip(nu, disc, floor)]
    with np.errstate(divide="ignore", invalid="ignore"):
        predicted = nu - b - (b * b + b * dp + a) / (nu - dp)
    return BoundReport(
        nu=nu_all, kappa=k, eigenvalues=result.eigenvalues.copy(),
        est1_lower=lower, est1_upper=nu.copy(), est2_upper=est2,
        discriminant=disc, discr_ok=discr_ok,
        asym_residual=result.eigenvalues - predicted)


def asymptotic_scaled_residuals(report: BoundReport) -> np.ndarray:
    """``|asym_residual_n| * nu_{kappa+n}^2`` for each computed n."""
    nu = report.est1_upper
    return np.abs(report.asym_residual) * nu ** 2


def asymptotics_bounded(report: BoundReport, factor: float = 10.0) -> tuple[bool, float, float]:
    """Boundedness test over the upper half of computed n: max below
    ``factor`` times the median.  Returns (verdict, max, median)."""
    r = asymptotic_scaled_residuals(report)
    upper = r[len(r) // 2:]
    if upper.size == 0:
        return True, 0.0, 0.0
    mx, med = float(np.max(upper)), float(np.median(upper))
    return mx < factor * med, mx, med
