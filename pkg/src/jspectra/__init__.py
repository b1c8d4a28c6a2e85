"""Spectral analysis of J-self-adjoint block matrices ``[[A, B], [-B^T, D]]``."""

from .enclosure import (EnclosureParams, RelativeBoundPair, enclosure_params,
                        in_enclosure, min_a_for_b, max_ahat_for_bhat, optimize_bound)
from .model import BlockSystem, adjoint, assemble, build_system, spectrum_M
from .schur import rayleigh_p, schur_at, s_form, s_form_deriv
from .tolerances import Tolerances, tol, tolerance_scale
from .vareig import bounds_report, solve_eigenvalue, variational_spectrum

__version__ = "0.1.0"

__all__ = [
    "BlockSystem", "EnclosureParams", "RelativeBoundPair", "Tolerances",
    "adjoint", "assemble", "bounds_report", "build_system", "enclosure_params",
    "in_enclosure", "max_ahat_for_bhat", "min_a_for_b", "optimize_bound",
    "rayleigh_p", "s_form", "s_form_deriv", "schur_at", "solve_eigenvalue",
    "spectrum_M", "tol", "tolerance_scale", "variational_spectrum",
]
