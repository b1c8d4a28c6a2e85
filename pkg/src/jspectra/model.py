"""Block system ``M = [[A, B], [-B^T, D]]`` and its structural companions."""

from __future__ import annotations

import dataclasses
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import numkernel as nk
from .errors import DimensionMismatch
from .tolerances import tol


@dataclasses.dataclass(frozen=True, eq=False)
class BlockSystem:
    """Immutable triple (A, B, D) with cached spectral data of A and D.

    Build through :func:`build_system`, which validates shapes and symmetry.
    """

    A: np.ndarray
    B: np.ndarray
    D: np.ndarray
    spec_A: nk.SymEig
    spec_D: nk.SymEig

    @property
    def n1(self) -> int:
        return self.A.shape[0]

    @property
    def n2(self) -> int:
        return self.D.shape[0]

    @property
    def alpha_minus(self) -> float:
        return float(self.spec_A.values[0])

    @property
    def alpha_plus(self) -> float:
        return float(self.spec_A.values[-1])

    @property
    def delta_plus(self) -> float:
        return float(self.spec_D.values[-1])

    @property
    def delta_minus(self) -> float:
        return float(self.spec_D.values[0])

    @cached_property
    def norm_A(self) -> float:
        w = self.spec_A.values
        return float(max(abs(w[0]), abs(w[-1])))

    @cached_property
    def norm_D(self) -> float:
        w = self.spec_D.values
        return float(max(abs(w[0]), abs(w[-1])))

    @cached_property
    def norm_B(self) -> float:
        return nk.norm2(self.B)

    @cached_property
    def BBt(self) -> np.ndarray:
        G = self.B @ self.B.T
        return 0.5 * (G + G.T)

    @cached_property
    def BQ(self) -> np.ndarray:
        """``B`` expressed in the eigenbasis of ``D`` (used by every resolvent)."""
        return self.B @ self.spec_D.vectors

    @cached_property
    def M(self) -> np.ndarray:
        return assemble(self).M

    @cached_property
    def norm_M(self) -> float:
        return nk.norm2(self.M)

    @cached_property
    def spectrum(self) -> np.ndarray:
        return nk.gen_eig(self.M)

    @property
    def is_coupled(self) -> bool:
        return bool(np.any(self.B != 0))


class AssembledM(NamedTuple):
    M: np.ndarray
    J: np.ndarray


def build_system(A, B, D) -> BlockSystem:
    A = np.atleast_2d(np.asarray(A, dtype=float))
    D = np.atleast_2d(np.asarray(D, dtype=float))
    B = np.asarray(B, dtype=float)
    if B.ndim == 1:
        B = B.reshape(A.shape[0], -1) if A.shape[0] else B.reshape(0, -1)
    if A.shape[0] == 0 or D.shape[0] == 0:
        raise DimensionMismatch("A and D must be non-empty")
    A = nk.check_symmetric(A, "A")
    D = nk.check_symmetric(D, "D")
    if B.shape != (A.shape[0], D.shape[0]):
        raise DimensionMismatch(
            f"B has shape {B.shape}, expected {(A.shape[0], D.shape[0])}")
    for X in (A, B, D):
        if not np.all(np.isfinite(X)):
            raise DimensionMismatch("matrices must have finite entries")
        X.setflags(write=False)
    return BlockSystem(A, B, D, nk.sym_eig(A), nk.sym_eig(D))


def signature(n1: int, n2: int) -> np.ndarray:
    return np.diag(np.concatenate([np.ones(n1), -np.ones(n2)]))


def assemble(system: BlockSystem) -> AssembledM:
    M = np.block([[system.A, system.B], [-system.B.T, system.D]])
    return AssembledM(M, signature(system.n1, system.n2))


def adjoint(system: BlockSystem) -> np.ndarray:
    return np.block([[system.A, -system.B], [system.B.T, system.D]])


def spectrum_M(system: BlockSystem) -> np.ndarray:
    """Eigenvalues of ``M`` (brute-force dense oracle), ordered by (Re, Im)."""
    return system.spectrum


def cluster(values, radius: float) -> list[np.ndarray]:
    """Group sorted real values into clusters whose neighbours are within
    ``radius``; returns index arrays into ``values``."""
    values = np.asarray(values)
    if values.size == 0:
        return []
    order = np.argsort(values, kind="stable")
    groups, current = [], [order[0]]
    for prev, idx in zip(order[:-1], order[1:]):
        if values[idx] - values[prev] <= radius:
            current.append(idx)
        else:
            groups.append(np.array(current))
            current = [idx]
    groups.append(np.array(current))
    return groups


def real_eigenvalues(system: BlockSystem, imag_tol: float | None = None) -> np.ndarray:
    """Sorted real parts of the eigenvalues of ``M`` whose imaginary part is
    negligible."""
    z = system.spectrum
    if imag_tol is None:
        imag_tol = tol().eig * max(system.norm_M, 1.0)
    return np.sort(z[np.abs(z.imag) <= imag_tol].real)
