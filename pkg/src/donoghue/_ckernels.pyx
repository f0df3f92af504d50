# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Herglotz sums.

Mirrors ``donoghue._pykernels`` function for function; the two must agree to
rounding.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def herglotz_sum(const double[::1] lam, const double[::1] w, const double complex[::1] z):
    """Sum_j w_j * (1/(lam_j - z) - lam_j/(1 + lam_j**2)) for every z."""
    cdef Py_ssize_t n = lam.shape[0]
    cdef Py_ssize_t m = z.shape[0]
    cdef Py_ssize_t j, k
    cdef double complex acc, zk
    cdef double l
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] res = out
    with nogil:
        for k in range(m):
            zk = z[k]
            acc = 0
            for j in range(n):
                l = lam[j]
                acc = acc + w[j] * (1.0 / (l - zk) - l / (1.0 + l * l))
            res[k] = acc
    return out


def norming_sum(const double[::1] lam, const double[::1] w):
    """Sum_j w_j / (1 + lam_j**2)."""
    cdef Py_ssize_t n = lam.shape[0]
    cdef Py_ssize_t j
    cdef double acc = 0.0
    with nogil:
        for j in range(n):
            acc += w[j] / (1.0 + lam[j] * lam[j])
    return acc


def trapezoid_weights(const double[::1] grid):
    """Composite trapezoid weights for a strictly increasing grid."""
    cdef Py_ssize_t n = grid.shape[0]
    cdef Py_ssize_t k
    cdef double h
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] tw = out
    with nogil:
        for k in range(n - 1):
            h = 0.5 * (grid[k + 1] - grid[k])
            tw[k] += h
            tw[k + 1] += h
    return out
