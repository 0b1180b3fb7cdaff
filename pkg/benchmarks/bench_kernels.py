#!/usr/bin/env python
"""Timing comparison of the compiled vs numpy fourier-profile kernels.

Run:  python benchmarks/bench_kernels.py [N ...]

Both backends compute the same length-N profile p[d] = (1/2N) sum_k
w_k exp(2*pi*i*k*d/N); the compiled kernel does the O(N^2) sum directly
while the fallback goes through np.fft.ifft.  Results are checked to
agree before timing, so the benchmark doubles as a consistency test.
"""

import sys
import time

import numpy as np

from eechain import _kernels_py

try:
    from eechain import _kernels

    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False


def _time(fn, weights, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(weights)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv):
    sizes = [int(a) for a in argv] or [64, 256, 1024, 4096]
    rng = np.random.default_rng(7)
    print(f"{'N':>6}  {'numpy (ms)':>12}  {'compiled (ms)':>14}  {'ratio':>7}")
    for n in sizes:
        weights = rng.standard_normal(n)
        repeats = max(3, min(50, 200_000 // max(n, 1)))
        ref = _kernels_py.fourier_profile(weights)
        t_np = _time(_kernels_py.fourier_profile, weights, repeats)
        if HAVE_COMPILED:
            got = _kernels.fourier_profile(weights)
            err = np.abs(got - ref).max()
            if err > 1e-10:
                raise SystemExit(f"backend mismatch at N={n}: max|diff|={err:.3e}")
            t_cy = _time(_kernels.fourier_profile, weights, repeats)
            print(
                f"{n:>6}  {t_np * 1e3:>12.4f}  {t_cy * 1e3:>14.4f}"
                f"  {t_np / t_cy:>7.2f}"
            )
        else:
            print(f"{n:>6}  {t_np * 1e3:>12.4f}  {'(not built)':>14}  {'-':>7}")
    if not HAVE_COMPILED:
        print("compiled extension unavailable; showing numpy backend only")


if __name__ == "__main__":
    main(sys.argv[1:])
