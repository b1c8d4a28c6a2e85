"""Finite-difference block systems on (0, 1) with Dirichlet conditions.

Example 1 couples the Dirichlet Laplacian to multiplication operators:
``A = -d^2/ds^2``, ``B = sqrt(w)``, ``D = u``.  Example 2 uses
``A = -d^2/ds^2 + q``, ``B^T = v d/ds`` (centered differences, zero ghost
values) and ``D = u``.

Profiles (u, w, q, v) are given as a constant, an array of grid values, a
callable of the grid, or a preset dict such as ``{"kind": "step", "left": 0,
"right": 1, "at": 0.5}`` or ``{"kind": "sin", "amplitude": 1, "frequency": 1,
"offset": 0}``.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Callable, Union

import numpy as np

from . import enclosure, vareig
from .errors import GridTooSmall, InputError, NegativeWeight
from .model import BlockSystem, build_system

Profile = Union[float, int, np.ndarray, list, Callable[[np.ndarray], np.ndarray], dict]


def grid(n: int) -> tuple[np.ndarray, float]:
    if n < 3:
        raise GridTooSmall(f"grid size must be at least 3, got {n}")
    h = 1.0 / (n + 1)
    return h * np.arange(1, n + 1), h


def evaluate_profile(profile: Profile, s: np.ndarray) -> np.ndarray:
    if callable(profile):
        vals = np.asarray(profile(s), dtype=float)
        return np.broadcast_to(vals, s.shape).astype(float)
    if isinstance(profile, dict):
        return _preset(profile, s)
    if np.isscalar(profile):
        return np.full(s.shape, float(profile))
    vals = np.asarray(profile, dtype=float)
    if vals.shape != s.shape:
        raise InputError(f"tabulated profile has {vals.size} values, grid has {s.size}")
    return vals


def _preset(preset: dict, s: np.ndarray) -> np.ndarray:
    kind = preset.get("kind")
    if kind == "constant":
        return np.full(s.shape, float(preset.get("value", 0.0)))
    if kind == "step":
        return np.where(s < float(preset.get("at", 0.5)), float(preset.get("left", 0.0)),
                        float(preset.get("right", 1.0)))
    if kind == "sin":
        return (float(preset.get("offset", 0.0)) + float(preset.get("amplitude", 1.0))
                * np.sin(np.pi * float(preset.get("frequency", 1.0)) * s))
    raise InputError(f"unknown profile preset {kind!r}")


def dirichlet_laplacian(n: int) -> np.ndarray:
    _, h = grid(n)
    return (2 * np.eye(n) - np.eye(n, k=1) - np.eye(n, k=-1)) / h ** 2


def laplacian_eigenvalues(n: int) -> np.ndarray:
    """Closed form ``2(1 - cos(k pi / (n+1))) / h^2``, ascending."""
    _, h = grid(n)
    k = np.arange(1, n + 1)
    return 2 * (1 - np.cos(k * np.pi / (n + 1))) / h ** 2


def centered_difference(n: int) -> np.ndarray:
    _, h = grid(n)
    return (np.eye(n, k=1) - np.eye(n, k=-1)) / (2 * h)


@dataclasses.dataclass(frozen=True)
class Example1Config:
    n: int
    u: Profile = 0.0
    w: Profile = 1.0


@dataclasses.dataclass(frozen=True)
class Example2Config:
    n: int
    q: Profile = 10.0
    u: Profile = 0.0
    v: Profile = 1.0


def build_example1(cfg: Example1Config) -> BlockSystem:
    s, _ = grid(cfg.n)
    w = evaluate_profile(cfg.w, s)
    if np.any(w < 0):
        raise NegativeWeight("coupling weight w must be non-negative")
    u = evaluate_profile(cfg.u, s)
    return build_system(dirichlet_laplacian(cfg.n), np.diag(np.sqrt(w)), np.diag(u))


def build_example2(cfg: Example2Config) -> BlockSystem:
    s, _ = grid(cfg.n)
    q = evaluate_profile(cfg.q, s)
    u = evaluate_profile(cfg.u, s)
    v = evaluate_profile(cfg.v, s)
    A = dirichlet_laplacian(cfg.n) + np.diag(q)
    Bstar = v[:, None] * centered_difference(cfg.n)
    return build_system(A, Bstar.T, np.diag(u))


def example2_analytic_pair(cfg: Example2Config) -> tuple[float, float]:
    """``(a, b) = (-sup|v|^2 inf q, sup|v|^2)`` from the grid values."""
    s, _ = grid(cfg.n)
    v2 = evaluate_profile(cfg.v, s) ** 2
    q = evaluate_profile(cfg.q, s)
    b = float(v2.max())
    return -b * float(q.min()), b


def example2_analytic_lower_pair(cfg: Example2Config) -> tuple[float, float]:
    """``(a_hat, b_hat) = (-inf|v|^2 sup q, inf|v|^2)``."""
    s, _ = grid(cfg.n)
    v2 = evaluate_profile(cfg.v, s) ** 2
    q = evaluate_profile(cfg.q, s)
    b_hat = float(v2.min())
    return -b_hat * float(q.max()), b_hat


BUILDERS: dict[str, tuple[type, Callable[[Any], BlockSystem]]] = {
    "ex1": (Example1Config, build_example1),
    "ex2": (Example2Config, build_example2),
}


def build_named(name: str, **config) -> BlockSystem:
    try:
        cls, builder = BUILDERS[name]
    except KeyError:
        raise InputError(f"unknown example {name!r}; choose from {sorted(BUILDERS)}") from None
    return builder(cls(**config))


def refine_and_track(name: str, config: dict, n_list, K: int = 5) -> list[dict]:
    """Grid-refinement table: per n, the enclosure constants, the first K
    eigenvalues above gamma0 and their bound margins."""
    n_list = list(n_list)
    if n_list != sorted(n_list):
        raise InputError("n_list must be ascending")
    rows = []
    for n in n_list:
        system = build_named(name, n=n, **config)
        a, b, params = enclosure.optimize_bound(system)
        res = vareig.variational_spectrum(system, params, N=K)
        b_hat = 0.0
        rep = vareig.bounds_report(system, params, res, a, b,
                                   enclosure.max_ahat_for_bhat(system, b_hat), b_hat)
        margins = rep.margins()
        rows.append({
            "n": n, "a": a, "b": b, "mu": params.mu, "mu_plus": params.mu_plus,
            "condA": params.condA, "kappa": res.kappa,
            "eigenvalues": res.eigenvalues.tolist(),
            "est1_lower_margin": margins["est1_lower"],
            "est1_upper_margin": margins["est1_upper"],
            "asym_residual": rep.asym_residual.tolist(),
        })
    return rows
