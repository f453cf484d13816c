# cython: language_level=3
"""Compiled inner loops: BFS distances, cyclic Jacobi, Berkowitz mod p.

Signatures mirror :mod:`ecc_spectra._purepy`; the selection between the two
happens in :mod:`ecc_spectra._backend`.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs
from libc.stdint cimport int32_t, int64_t, uint64_t

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cnp.import_array()


def bfs_all_pairs(const int32_t[::1] indptr, const int32_t[::1] indices, int n):
    """Distance matrix from CSR adjacency; ``-1`` marks unreachable pairs."""
    cdef cnp.ndarray[int32_t, ndim=2] out = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] dist = out
    cdef int32_t[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, v, k, du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[s, v] < 0:
                    dist[s, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return out


cdef double _offdiag_norm(double[:, ::1] a, int n) nogil:
    cdef double acc = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)


def jacobi_eigenvalues(double[:, ::1] a, double tol, int max_sweeps):
    """Cyclic Jacobi on ``a`` (overwritten).

    Returns ``(diagonal, sweeps, converged)``.
    """
    cdef int n = a.shape[0]
    cdef int i, j, p, q, k, sweep = 0
    cdef double norm = 0.0, theta, t, c, s, akp, akq, apq
    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    norm = sqrt(norm)
    cdef double target = tol * norm
    cdef bint converged = _offdiag_norm(a, n) <= target
    with nogil:
        while not converged and sweep < max_sweeps:
            sweep += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) < 1e-280:
                        a[p, q] = 0.0
                        a[q, p] = 0.0
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                    for k in range(n):
                        akp = a[p, k]
                        akq = a[q, k]
                        a[p, k] = c * akp - s * akq
                        a[q, k] = s * akp + c * akq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            converged = _offdiag_norm(a, n) <= target
    diag = np.empty(n, dtype=np.float64)
    for i in range(n):
        diag[i] = a[i, i]
    return diag, sweep, bool(converged)


def berkowitz_mod(const int64_t[:, ::1] a, int64_t p):
    """Characteristic polynomial coefficients of ``a`` modulo prime ``p < 2**31``.

    Entries must already lie in ``[0, p)``.  Output is in descending powers:
    ``det(xI - A) = sum(out[i] * x**(n - i))`` (mod p).
    """
    cdef int n = a.shape[0]
    cdef cnp.ndarray[int64_t, ndim=1] poly_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] poly = poly_arr
    poly[0] = 1
    if n == 0:
        return poly_arr
    cdef uint64_t up = <uint64_t> p
    poly[1] = <int64_t> ((up - <uint64_t> a[0, 0]) % up)
    cdef int64_t[::1] vec = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] nxt = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] tcol = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] new = np.zeros(n + 1, dtype=np.int64)
    cdef int r, i, j, k, hi
    cdef u128 acc
    with nogil:
        for r in range(1, n):
            tcol[0] = 1
            tcol[1] = <int64_t> ((up - <uint64_t> a[r, r]) % up)
            for i in range(r):
                vec[i] = a[i, r]
            for k in range(r):
                # products are < 2**62, so a 128-bit sum needs one reduction
                acc = 0
                for j in range(r):
                    acc += <u128> (<uint64_t> a[r, j] * <uint64_t> vec[j])
                tcol[k + 2] = <int64_t> ((up - <uint64_t> (acc % up)) % up)
                if k + 1 < r:
                    for i in range(r):
                        acc = 0
                        for j in range(r):
                            acc += <u128> (<uint64_t> a[i, j] * <uint64_t> vec[j])
                        nxt[i] = <int64_t> (acc % up)
                    for i in range(r):
                        vec[i] = nxt[i]
            for i in range(r + 2):
                acc = 0
                hi = i if i < r else r
                for j in range(hi + 1):
                    acc += <u128> (<uint64_t> tcol[i - j] * <uint64_t> poly[j])
                new[i] = <int64_t> (acc % up)
            for i in range(r + 2):
                poly[i] = new[i]
    return poly_arr
