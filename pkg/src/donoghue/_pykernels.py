"""Pure-Python (numpy) versions of the compiled Herglotz sums."""

import numpy as np


def herglotz_sum(lam, w, z):
    lam = np.asarray(lam, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    z = np.asarray(z, dtype=np.complex128)
    if lam.size == 0:
        return np.zeros(z.shape, dtype=np.complex128)
    shift = lam / (1.0 + lam * lam)
    out = np.zeros(z.shape, dtype=np.complex128)
    # atoms accumulated left to right, same order as the compiled loop
    for lj, wj, cj in zip(lam, w, shift):
        out += wj * (1.0 / (lj - z) - cj)
    return out


def norming_sum(lam, w):
    lam = np.asarray(lam, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    acc = 0.0
    for t in w / (1.0 + lam * lam):
        acc += t
    return float(acc)


def trapezoid_weights(grid):
    grid = np.asarray(grid, dtype=np.float64)
    tw = np.zeros(grid.shape, dtype=np.float64)
    h = 0.5 * np.diff(grid)
    tw[:-1] += h
    tw[1:] += h
    return tw
