"""Relative-bound pairs, condition (A) and the enclosure set for sigma(M).

For a pair (a, b) with ``B B^T <= a I + b A`` every constant below is a
closed-form expression in (a, b, alpha_-, delta_+, delta_-).  Finite
dimensions make B bounded, so the infimal relative bound b_0 is 0 and D is
always bounded; the unbounded-D branches are reachable only through the
``d_unbounded`` flag.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, NamedTuple

import numpy as np

from . import numkernel as nk
from .errors import EmptyGrid, InvalidBound
from .model import BlockSystem
from .tolerances import tol


@dataclasses.dataclass(frozen=True)
class RelativeBoundPair:
    """Upper pair (a, b): ``BB^T <= aI + bA``; lower pair: ``BB^T >= a_hat I + b_hat A``."""

    a: float
    b: float
    a_hat: float
    b_hat: float


@dataclasses.dataclass(frozen=True)
class EnclosureParams:
    """Constants defining the enclosure set.

    ``None`` stands for an infinite value: ``mu_plus`` is ``None`` when
    condition (A) fails; ``mu_minus``, ``xi2`` are ``None`` only for an
    unbounded D.
    """

    alpha_minus: float
    delta_plus: float
    delta_minus: float | None
    a: float
    b: float
    mu: float
    mu_minus: float | None
    mu_plus: float | None
    xi1: float
    xi2: float | None
    xi_minus: float
    eta: float
    condA: bool
    condA1: bool
    condA2: bool
    strictA: bool
    d_unbounded: bool = False

    @property
    def gap(self) -> float | None:
        if self.mu_plus is None:
            return None
        return self.mu_plus - self.mu

    @property
    def discriminant(self) -> float:
        """``b delta_+ + b^2 + a``, the quantity under every square root."""
        return self.b * self.delta_plus + self.b ** 2 + self.a


def _psd_floor(system: BlockSystem) -> float:
    return tol().psd * (1.0 + system.norm_A + system.norm_B ** 2)


def min_a_for_b(system: BlockSystem, b: float) -> float:
    """Smallest a with ``||B^T x||^2 <= a||x||^2 + b x^T A x`` for all x."""
    if b < 0:
        raise InvalidBound("b must be non-negative")
    return float(nk.sym_eigvals(system.BBt - b * system.A)[-1])


def max_ahat_for_bhat(system: BlockSystem, b_hat: float) -> float:
    """Largest a_hat with ``||B^T x||^2 >= a_hat||x||^2 + b_hat x^T A x``."""
    if b_hat < 0:
        raise InvalidBound("b_hat must be non-negative")
    return float(nk.sym_eigvals(system.BBt - b_hat * system.A)[0])


def bound_pair(system: BlockSystem, b: float = 0.0, b_hat: float = 0.0) -> RelativeBoundPair:
    return RelativeBoundPair(min_a_for_b(system, b), float(b),
                             max_ahat_for_bhat(system, b_hat), float(b_hat))


def psd_residual(system: BlockSystem, a: float, b: float) -> float:
    """Smallest eigenvalue of ``aI + bA - BB^T`` (non-negative iff (a, b) is valid)."""
    return float(nk.sym_eigvals(a * np.eye(system.n1) + b * system.A - system.BBt)[0])


def lower_psd_residual(system: BlockSystem, a_hat: float, b_hat: float) -> float:
    """Smallest eigenvalue of ``BB^T - a_hat I - b_hat A``."""
    return float(nk.sym_eigvals(system.BBt - a_hat * np.eye(system.n1) - b_hat * system.A)[0])


def _pos(t: float) -> float:
    return t if t > 0 else 0.0


def enclosure_params(system: BlockSystem, a: float, b: float, *,
                     d_unbounded: bool = False, check: bool = True) -> EnclosureParams:
    if b < 0:
        raise InvalidBound("b must be non-negative")
    if check and psd_residual(system, a, b) < -_psd_floor(system):
        raise InvalidBound(f"aI + bA - BB^T is not positive semidefinite for (a, b) = ({a}, {b})")

    al, dp = system.alpha_minus, system.delta_plus
    dm = None if d_unbounded else system.delta_minus
    disc = b * dp + b * b + a
    root = math.sqrt(_pos(disc))

    condA1 = disc <= 0 and b > 0
    condA2 = (al - dp) / 2 >= b + root
    condA = condA1 or condA2
    strictA = disc < 0 or (al - dp) / 2 > b + root

    mu = dp + b + root
    if condA1 and not condA2:
        mu_plus = -a / b
    elif condA2 and not condA1:
        mu_plus = al - b - root
    elif condA1 and condA2:
        mu_plus = max(-a / b, al - b)
    else:
        mu_plus = None

    # a + b*alpha_- >= 0 holds for any valid pair; clip roundoff
    xi1 = al - max(b / 2, math.sqrt(_pos(b * al + a)))
    xi2 = None if dm is None else (al + dm) / 2
    xi_minus = xi1 if xi2 is None else max(xi1, xi2)
    mu_minus = None if dm is None else min(al, dm)
    # condition (A) forces eta = 0 exactly; skip the cancelling subtraction
    eta = 0.0 if condA else math.sqrt(_pos(disc - _pos((al - dp) / 2 - b) ** 2))

    return EnclosureParams(
        alpha_minus=al, delta_plus=dp, delta_minus=dm, a=float(a), b=float(b),
        mu=mu, mu_minus=mu_minus, mu_plus=mu_plus, xi1=xi1, xi2=xi2,
        xi_minus=xi_minus, eta=eta, condA=condA, condA1=condA1, condA2=condA2,
        strictA=strictA, d_unbounded=d_unbounded)


def box_tolerance(z: complex) -> float:
    return tol().box * (1.0 + abs(z))


def in_box(z: complex, params: EnclosureParams) -> bool:
    """Membership in the non-real box ``xi_- <= Re z <= mu, |Im z| <= eta``."""
    t = box_tolerance(z)
    return (params.xi_minus - t <= z.real <= params.mu + t
            and abs(z.imag) <= params.eta + t)


def in_enclosure(z: complex, params: EnclosureParams) -> bool:
    z = complex(z)
    t = box_tolerance(z)
    real = abs(z.imag) <= t
    x = z.real
    if params.condA:
        if not real:
            return False
        upper = x >= params.mu_plus - t
        if params.mu_minus is None:
            return x <= params.mu + t or upper
        return params.mu_minus - t <= x <= params.mu + t or upper
    if real and (params.mu_minus is None or x >= params.mu_minus - t):
        return True
    return in_box(z, params)


def enclosure_margin(z: complex, params: EnclosureParams) -> float:
    """Signed distance-like margin: positive inside the enclosure, negative
    outside (by how much the nearest constraint is violated)."""
    z = complex(z)
    x, y = z.real, abs(z.imag)
    if params.condA:
        lower = min(x - (params.mu_minus if params.mu_minus is not None else -math.inf),
                    params.mu - x)
        upper = x - params.mu_plus
        return min(max(lower, upper), -y) if y > 0 else max(lower, upper)
    real_part = (x - params.mu_minus if params.mu_minus is not None else math.inf)
    real_margin = min(real_part, -y) if y > 0 else real_part
    box = min(x - params.xi_minus, params.mu - x, params.eta - y)
    return max(real_margin, box)


def enclosure_boundary(params: EnclosureParams, right: float) -> dict:
    """Interval endpoints and box corners of the enclosure (for plotting).

    ``right`` truncates the unbounded interval.
    """
    out = {"condA": params.condA, "intervals": [], "box": None}
    if params.condA:
        lo = params.mu_minus if params.mu_minus is not None else -right
        out["intervals"] = [[lo, params.mu], [params.mu_plus, max(right, params.mu_plus)]]
    else:
        lo = params.mu_minus if params.mu_minus is not None else -right
        out["intervals"] = [[lo, max(right, lo)]]
        out["box"] = [[params.xi_minus, -params.eta], [params.mu, -params.eta],
                      [params.mu, params.eta], [params.xi_minus, params.eta]]
    return out


def default_b_grid(system: BlockSystem) -> list[float]:
    """``{0} U {2^k ||B||^2 / ||A|| : k = -6..6}``, finite entries only."""
    grid = [0.0]
    if system.norm_A > 0 and system.norm_B > 0:
        base = system.norm_B ** 2 / system.norm_A
        grid += [b for b in (base * 2.0 ** k for k in range(-6, 7)) if math.isfinite(b)]
    return grid


class BoundChoice(NamedTuple):
    a: float
    b: float
    params: EnclosureParams


def optimize_bound(system: BlockSystem, b_grid: Iterable[float] | None = None) -> BoundChoice:
    """Pick (a, b) from the grid, using the minimal a for each b.

    Prefers pairs satisfying condition (A) with the widest gap
    ``mu_+ - mu``; otherwise the smallest eta, then the smallest mu.  Ties
    go to the smaller b, so the result does not depend on grid order.
    """
    grid = sorted({float(b) for b in (default_b_grid(system) if b_grid is None else b_grid)
                   if b >= 0})
    if not grid:
        raise EmptyGrid("b grid has no non-negative entries")
    best_key, best = None, None
    for b in grid:
        a = min_a_for_b(system, b)
        p = enclosure_params(system, a, b, check=False)
        key = (0, -p.gap, 0.0) if p.condA else (1, p.eta, p.mu)
        if best_key is None or key < best_key:
            best_key, best = key, BoundChoice(a, b, p)
    return best


def nott_bound(a: float, b: float, t: float, delta: float) -> tuple[bool, float]:
    """If ``((t - delta)/2)^2 <= b t + a`` return (True, ``b + sqrt(b delta + b^2 + a)``),
    which then bounds ``(t - delta)/2`` from above; else (False, nan)."""
    if b < 0:
        raise InvalidBound("b must be non-negative")
    if ((t - delta) / 2) ** 2 > b * t + a:
        return False, math.nan
    return True, b + math.sqrt(_pos(b * delta + b * b + a))


def bounded_coupling_intervals(system: BlockSystem) -> tuple[float, float] | None:
    """For ``||B|| <= (alpha_- - delta_+)/2`` the real spectrum lies in
    ``(-inf, delta_+ + ||B||] U [alpha_- - ||B||, inf)``; returns the two
    finite endpoints, or None when the hypothesis fails."""
    nb = system.norm_B
    if nb > (system.alpha_minus - system.delta_plus) / 2:
        return None
    return system.delta_plus + nb, system.alpha_minus - nb
