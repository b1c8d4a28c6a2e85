"""Numerical tolerances shared by every module.

All values are relative unless noted.  ``tolerance_scale`` multiplies every
entry for the duration of a ``with`` block (used by ``--tol-scale``).
"""

from __future__ import annotations

import contextlib
import dataclasses
from contextvars import ContextVar


@dataclasses.dataclass(frozen=True)
class Tolerances:
    eig: float = 1e-10
    sym: float = 1e-12
    psd: float = 1e-9
    box: float = 1e-8
    cluster: float = 1e-8
    sep: float = 1e-10
    root: float = 1e-12
    cmp: float = 1e-8  # absolute
    mu_offset: float = 1e-7

    def scaled(self, factor: float) -> "Tolerances":
        if not factor > 0:
            raise ValueError(f"tolerance scale must be positive, got {factor}")
        return Tolerances(**{f.name: getattr(self, f.name) * factor
                             for f in dataclasses.fields(self)})


DEFAULT = Tolerances()
_current: ContextVar[Tolerances] = ContextVar("jspectra_tolerances", default=DEFAULT)


def tol() -> Tolerances:
    """Return the tolerances active in the current context."""
    return _current.get()


@contextlib.contextmanager
def tolerance_scale(factor: float):
    token = _current.set(DEFAULT.scaled(factor))
    try:
        yield tol()
    finally:
        _current.reset(token)
