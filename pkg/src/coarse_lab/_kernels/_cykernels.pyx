# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels (see pure.py for the reference lane)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def jacobi_eigh(a, double tol=1e-12, int max_sweeps=60):
    """Cyclic Jacobi eigensolver; same contract as pure.jacobi_eigh."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] am = np.array(a, dtype=np.float64)
    cdef Py_ssize_t n = am.shape[0]
    if am.shape[1] != n:
        raise ValueError("matrix must be square")
    cdef cnp.ndarray[cnp.float64_t, ndim=2] vm = np.eye(n)
    cdef double[:, :] A = am
    cdef double[:, :] V = vm
    cdef Py_ssize_t p, q, k, sweep
    cdef double scale = 0.0, off, apq, tau, t, c, s, xp, xq
    if n < 2:
        return np.diag(am).copy(), vm
    for p in range(n):
        for q in range(n):
            scale += A[p, q] * A[p, q]
    scale = sqrt(scale)
    if scale == 0.0:
        return np.zeros(n), vm
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += A[p, q] * A[p, q]
        if sqrt(off) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if fabs(apq) <= 1e-300:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    xp = A[k, p]
                    xq = A[k, q]
                    A[k, p] = c * xp - s * xq
                    A[k, q] = s * xp + c * xq
                for k in range(n):
                    xp = A[p, k]
                    xq = A[q, k]
                    A[p, k] = c * xp - s * xq
                    A[q, k] = s * xp + c * xq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    xp = V[k, p]
                    xq = V[k, q]
                    V[k, p] = c * xp - s * xq
                    V[k, q] = s * xp + c * xq
    w = np.diag(am).copy()
    order = np.argsort(w, kind="stable")
    return w[order], vm[:, order]


def floyd_warshall(dist):
    """All-pairs shortest-path closure; same contract as pure.floyd_warshall."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] dm = np.array(dist, dtype=np.float64)
    cdef Py_ssize_t n = dm.shape[0]
    if dm.shape[1] != n:
        raise ValueError("matrix must be square")
    cdef double[:, :] d = dm
    cdef Py_ssize_t i, j, k
    cdef double dik, alt
    for k in range(n):
        for i in range(n):
            dik = d[i, k]
            for j in range(n):
                alt = dik + d[k, j]
                if alt < d[i, j]:
                    d[i, j] = alt
    return dm
