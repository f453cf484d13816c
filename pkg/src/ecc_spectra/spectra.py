"""Floating-point eigenvalues by cyclic Jacobi rotations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _backend
from .errors import NoConvergence
from .exact import InertiaTriple
from .matrix import IntSymMatrix

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    norm: float = 0.0  # Frobenius norm of the source matrix

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def default_zero_tol(self) -> float:
        return 1e-7 * max(1.0, self.norm)


def symmetric_eigenvalues(
    a: IntSymMatrix | np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> Spectrum:
    """Eigenvalues, sorted descending, once the off-diagonal norm is below ``tol * ||A||_F``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    arr = a.to_float() if isinstance(a, IntSymMatrix) else np.asarray(a, dtype=np.float64)
    norm = float(np.linalg.norm(arr))
    diag, sweeps, converged = _backend.jacobi_eigenvalues(arr, tol, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge in {sweeps} sweeps")
    return Spectrum(tuple(sorted((float(x) for x in diag), reverse=True)), norm)


def spectral_radius(s: Spectrum) -> float:
    if not len(s):
        raise ValueError("empty spectrum")
    return max(abs(x) for x in s)


def inertia_float(s: Spectrum, zero_tol: float | None = None) -> InertiaTriple:
    if zero_tol is None:
        zero_tol = s.default_zero_tol()
    if zero_tol <= 0:
        raise ValueError("zero_tol must be positive")
    plus = sum(1 for x in s if x > zero_tol)
    minus = sum(1 for x in s if x < -zero_tol)
    return InertiaTriple(plus, minus, len(s) - plus - minus)


def interlaces(sub: Spectrum, full: Spectrum, slack: float | None = None) -> bool:
    """Cauchy interlacing: ``lam[i] >= mu[i] >= lam[n-m+i]`` for every ``i``."""
    lam, mu = full.eigenvalues, sub.eigenvalues
    n, m = len(lam), len(mu)
    if m > n:
        return False
    if slack is None:
        slack = 1e-9 * max(1.0, full.norm)
    return all(
        lam[i] + slack >= mu[i] >= lam[n - m + i] - slack
        for i in range(m)
    )


def cluster(values: Sequence[float], tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    """Group descending values into ``(representative, multiplicity)`` runs."""
    out: list[list] = []
    for x in values:
        if out and abs(out[-1][0] - x) <= tol:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(v, m) for v, m in out]
