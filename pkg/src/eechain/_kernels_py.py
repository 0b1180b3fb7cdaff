"""Pure-NumPy fallback for the hot summation kernel.

The only heavy primitive in the correlator pipeline is the circulant
profile

    p[d] = (1/2N) * sum_kappa w[kappa] * exp(2*pi*i*kappa*d/N)

for all offsets d = 0..N-1 at once.  That is an inverse DFT, so the
fallback simply delegates to FFT.
"""

import numpy as np


def fourier_profile(weights):
    """Half inverse-DFT of a length-N weight vector.

    Parameters
    ----------
    weights : (N,) array_like, real or complex
        Mode weights w_kappa.

    Returns
    -------
    (N,) complex ndarray with entry d equal to
    (1/2N) * sum_kappa w[kappa] * exp(2i pi kappa d / N).
    """
    w = np.asarray(weights, dtype=np.complex128)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a nonempty 1-d array")
    return np.fft.ifft(w) / 2.0
