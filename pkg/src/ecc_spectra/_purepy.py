"""Pure-Python versions of the kernels in ``_kernels.pyx``.

``berkowitz`` here works over exact Python integers directly, so it is also an
independent route against the compiled modular/CRT path.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np


def bfs_all_pairs(indptr, indices, n: int) -> np.ndarray:
    out = np.full((n, n), -1, dtype=np.int32)
    nbrs = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in nbrs[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        out[s] = row
    return out


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


# entries this small cannot affect convergence and would overflow theta
TINY = 1e-280


def jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi; same contract as the compiled kernel."""
    n = a.shape[0]
    target = tol * float(np.linalg.norm(a))
    converged = _offdiag_norm(a) <= target
    sweep = 0
    while not converged and sweep < max_sweeps:
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if abs(apq) < TINY:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
        converged = _offdiag_norm(a) <= target
    return np.diag(a).copy(), sweep, converged


def berkowitz(rows) -> list[int]:
    """Exact characteristic polynomial, descending powers, leading coefficient 1."""
    n = len(rows)
    poly = [1]
    if n == 0:
        return poly
    poly = [1, -rows[0][0]]
    for r in range(1, n):
        col = [rows[i][r] for i in range(r)]
        row = rows[r][:r]
        sub = [rows[i][:r] for i in range(r)]
        tcol = [1, -rows[r][r]]
        vec = col
        for k in range(r):
            tcol.append(-sum(x * y for x, y in zip(row, vec)))
            if k + 1 < r:
                vec = [sum(x * y for x, y in zip(srow, vec)) for srow in sub]
        poly = [
            sum(tcol[i - j] * poly[j] for j in range(min(i, r) + 1))
            for i in range(r + 2)
        ]
    return poly


def berkowitz_mod(a: np.ndarray, p: int) -> np.ndarray:
    rows = [[int(x) for x in r] for r in a]
    return np.array([c % p for c in berkowitz(rows)], dtype=np.int64)
