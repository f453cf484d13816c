"""Kernel backend selection.

The compiled ``_kernels`` extension is used when importable, unless the
environment variable ``ECC_SPECTRA_PURE_PYTHON`` is set to a non-empty value
other than ``0``.  :func:`use` switches at runtime (tests and the benchmark
exercise both).
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

from . import _purepy

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on build
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None

_forced_pure = os.environ.get("ECC_SPECTRA_PURE_PYTHON", "") not in ("", "0")
_active = "compiled" if (COMPILED_AVAILABLE and not _forced_pure) else "python"


def name() -> str:
    return _active


def use(backend: str) -> None:
    """Select ``"compiled"`` or ``"python"`` for subsequent kernel calls."""
    global _active
    if backend not in ("compiled", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "compiled" and not COMPILED_AVAILABLE:
        raise RuntimeError("compiled kernels are not built")
    _active = backend


def bfs_all_pairs(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    if _active == "compiled":
        return _compiled.bfs_all_pairs(indptr, indices, n)
    return _purepy.bfs_all_pairs(indptr, indices, n)


def jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int):
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    if _active == "compiled":
        return _compiled.jacobi_eigenvalues(work, tol, max_sweeps)
    return _purepy.jacobi_eigenvalues(work, tol, max_sweeps)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13):
        if m % sp == 0:
            return m == sp
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for m < 3.4e14
    for base in (2, 3, 5, 7, 11, 13, 17):
        x = pow(base, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """The i-th prime below 2**31, counting downwards."""
    start = (1 << 31) - 1 if i == 0 else _prime(i - 1) - 2
    m = start
    while not _is_prime(m):
        m -= 2
    return m


def coefficient_bound(rows) -> int:
    """Upper bound on |coefficients| of det(xI - A).

    The coefficient of ``x**(n-k)`` is a sum of ``k x k`` principal minors; by
    Hadamard each is at most the product of its rows' norms, so the
    ``k``-th elementary symmetric sum of the (rounded up) row norms bounds it.
    """
    norms = [math.isqrt(sum(x * x for x in r)) + 1 for r in rows]
    e = [1] + [0] * len(norms)
    for w in norms:
        for k in range(len(e) - 1, 0, -1):
            e[k] += e[k - 1] * w
    return max(e)


def _crt_charpoly(rows) -> list[int]:
    n = len(rows)
    bound = coefficient_bound(rows)
    modulus = 1
    result = [0] * (n + 1)
    i = 0
    while modulus <= 2 * bound:
        p = _prime(i)
        i += 1
        reduced = np.array([[x % p for x in r] for r in rows], dtype=np.int64).reshape(n, n)
        residues = _compiled.berkowitz_mod(reduced, p)
        # Garner-style incremental CRT
        inv = pow(modulus, -1, p)
        for j in range(n + 1):
            delta = (int(residues[j]) - result[j]) % p
            result[j] += modulus * (delta * inv % p)
        modulus *= p
    half = modulus // 2
    return [c - modulus if c > half else c for c in result]


def charpoly(rows) -> list[int]:
    """Exact char poly coefficients, descending powers, leading coefficient 1."""
    if _active == "compiled" and len(rows) > 0:
        return _crt_charpoly(rows)
    return _purepy.berkowitz([list(r) for r in rows])
