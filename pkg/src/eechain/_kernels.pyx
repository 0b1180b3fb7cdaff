# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled direct-summation kernel for the circulant correlator profile.

Computes p[d] = (1/2N) * sum_kappa w[kappa] * exp(2i pi kappa d / N) by
explicit O(N^2) summation over a precomputed table of the N-th roots of
unity.  The summation order (kappa = 0..N-1, left to right) is fixed, so
results are bit-reproducible run to run.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def fourier_profile(weights):
    """Same contract as eechain._kernels_py.fourier_profile."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] w = np.ascontiguousarray(
        weights, dtype=np.complex128)
    cdef Py_ssize_t n = w.shape[0]
    if n == 0:
        raise ValueError("weights must be a nonempty 1-d array")

    cdef cnp.ndarray[cnp.complex128_t, ndim=1] roots = np.exp(
        2j * np.pi * np.arange(n) / n)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(
        n, dtype=np.complex128)

    cdef Py_ssize_t d, kappa, idx
    cdef double complex acc
    cdef double scale = 1.0 / (2.0 * n)
    for d in range(n):
        acc = 0
        idx = 0
        for kappa in range(n):
            acc = acc + w[kappa] * roots[idx]
            idx += d
            if idx >= n:
                idx -= n
        out[d] = acc * scale
    return out
