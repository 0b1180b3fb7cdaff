"""Kernel backend selection.

Prefers the compiled Cython extension when it was built; otherwise falls
back to the NumPy/FFT implementation.  Both expose the same
``fourier_profile`` contract and agree to ~1e-13; see
benchmarks/bench_kernels.py for the speed comparison.
"""

from . import _kernels_py

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    _impl = _kernels_py
    BACKEND = "numpy"

fourier_profile = _impl.fourier_profile


def backend_name():
    """'compiled' when the Cython kernel is active, else 'numpy'."""
    return BACKEND
