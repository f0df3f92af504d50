"""Time the compiled and numpy kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--atoms N] [--points M] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from donoghue._backend import BACKENDS


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--atoms", type=int, default=2000)
    p.add_argument("--points", type=int, default=500)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    rng = np.random.default_rng(0)
    lam = rng.uniform(-20, 20, args.atoms)
    w = rng.uniform(0.1, 2.0, args.atoms)
    z = rng.uniform(-5, 5, args.points) + 1j * rng.uniform(0.05, 5, args.points)
    grid = np.sort(lam)

    ref = None
    print(f"{'backend':8} {'herglotz_sum':>14} {'norming_sum':>14} {'trapezoid':>14}")
    for name in sorted(BACKENDS):
        k = BACKENDS[name]
        out = k.herglotz_sum(lam, w, z)
        if ref is None:
            ref = out
        assert np.max(np.abs(out - ref)) < 1e-10, name
        times = [
            min(timeit.repeat(fn, number=1, repeat=args.repeat))
            for fn in (
                lambda: k.herglotz_sum(lam, w, z),
                lambda: k.norming_sum(lam, w),
                lambda: k.trapezoid_weights(grid),
            )
        ]
        print(f"{name:8} " + " ".join(f"{t * 1e3:12.3f}ms" for t in times))
    if "cython" not in BACKENDS:
        print("compiled extension not built; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
