"""Pure-numpy implementations of the hot kernels.

These are the fallback twins of the compiled extension: same signatures,
same deterministic sweep order, so either lane can back the public API.
"""

import numpy as np


def jacobi_eigh(a, tol=1e-12, max_sweeps=60):
    """Cyclic Jacobi eigensolver for a dense symmetric matrix.

    Returns (w, v): eigenvalues ascending and the matching orthonormal
    eigenvector columns.  Sweeps run in fixed row-major pivot order, so
    the result is deterministic for a given input.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def floyd_warshall(dist):
    """All-pairs shortest-path closure of a weighted distance matrix.

    `dist[i, j]` is the direct edge weight (np.inf where absent); the
    diagonal must be zero.  Returns a new matrix, input untouched.
    """
    d = np.array(dist, dtype=np.float64)
    n = d.shape[0]
    if d.shape != (n, n):
        raise ValueError("matrix must be square")
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return d
