"""Scale-flow (cMERA-style) pipeline: mixing angle, entangler strength
g(u), emergent radial metric, geodesic lengths, and the resulting
entanglement entropy closed forms.

Scale coordinate u <= 0 with momentum k = cutoff * e^u (k treated as a
positive quantity).  Two angle profiles appear:

* `bogoliubov_angle` — the closed-form profile
  phi(k) = (1/2) arcsin(k^z / sqrt(k^{2z} + m^2)) - (-1)^z pi/4,
  which feeds the g(u) pipeline.  Massless limits: pi/2 (odd z), 0 (even).
* `minimizing_angle` — the exact per-momentum minimizer of the energy
  integrand, phi = (pi - atan2(m, (-k)^z))/2, satisfying
  tan(2 phi) = -m/(-k)^z with curvature d^2e/dphi^2 = 4 omega >= 0.
  The two differ by a branch choice; stationarity checks use this one.

The inversion g(u) = -phi + k dphi/dk = -phi + dphi/du (chain rule at
k = cutoff e^u) has the closed form

    g(u) = -phi(k) + z m k^z / (2 (k^{2z} + m^2))

which `g_from_phi_numeric` reproduces by finite differences.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import trapezoid

from .errors import DegenerateInterval, InsufficientSampling

SQRT3 = math.sqrt(3.0)
MIN_POINTS_PER_DECADE = 100


def bogoliubov_angle(k, z, m):
    """Closed-form mixing angle at momentum k > 0."""
    k = np.asarray(k, dtype=float)
    if np.any(k <= 0):
        raise ValueError("momenta must be positive")
    if m == 0:
        # k^z / sqrt(k^{2z}) = 1 identically; evaluating it as a quotient
        # loses ~sqrt(eps) through the arcsin branch point
        ratio = np.ones_like(k)
    else:
        ratio = k**z / np.sqrt(k ** (2 * z) + m * m)
    phi = 0.5 * np.arcsin(np.clip(ratio, -1.0, 1.0)) - (-1.0) ** z * np.pi / 4.0
    return float(phi) if phi.ndim == 0 else phi


def minimizing_angle(k, z, m):
    """Per-momentum energy minimizer; valid for either sign of k."""
    k = np.asarray(k, dtype=float)
    phi = 0.5 * (np.pi - np.arctan2(m, (-k) ** z))
    return float(phi) if phi.ndim == 0 else phi


def g_closed_form(u, z, m, cutoff=1.0):
    """Entangler strength g(u) at scale u <= 0.

    Massless: the constant (pi/4)((-1)^z - 1) — 0 for even z, -pi/2 odd.
    Massive: -phi(k) + z m k^z / (2 omega^2) evaluated at k = cutoff e^u.
    """
    u = np.asarray(u, dtype=float)
    if m == 0:
        value = np.full_like(u, (np.pi / 4.0) * ((-1.0) ** z - 1.0))
        return float(value) if value.ndim == 0 else value
    k = cutoff * np.exp(u)
    omega_sq = k ** (2 * z) + m * m
    value = -bogoliubov_angle(k, z, m) + z * m * k**z / (2.0 * omega_sq)
    return float(value) if value.ndim == 0 else value


def _derivative_uniform(values, du):
    """Fourth-order first derivative on a uniform grid (5-point stencils)."""
    f = np.asarray(values, dtype=float)
    n = f.size
    if n < 5:
        raise InsufficientSampling("need at least 5 samples for differentiation")
    out = np.empty_like(f)
    out[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * du)
    out[0] = (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]) / (12 * du)
    out[1] = (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) / (12 * du)
    out[-2] = (3 * f[-1] + 10 * f[-2] - 18 * f[-3] + 6 * f[-4] - f[-5]) / (12 * du)
    out[-1] = (25 * f[-1] - 48 * f[-2] + 36 * f[-3] - 16 * f[-4] + 3 * f[-5]) / (12 * du)
    return out


def g_from_phi_numeric(u_values, phi_values):
    """g(u) = -phi(u) + dphi/du from a sampled angle profile.

    The grid must be uniform and at least 100 points per decade of scale
    (du <= ln(10)/100), else InsufficientSampling.
    """
    u = np.asarray(u_values, dtype=float)
    phi = np.asarray(phi_values, dtype=float)
    if u.ndim != 1 or u.shape != phi.shape or u.size < 5:
        raise InsufficientSampling("profile must be 1-d with at least 5 samples")
    steps = np.diff(u)
    du = steps[0]
    if du <= 0 or np.max(np.abs(steps - du)) > 1e-9 * max(abs(du), 1e-30):
        raise InsufficientSampling("profile grid must be uniform and increasing")
    if du > math.log(10.0) / MIN_POINTS_PER_DECADE + 1e-12:
        raise InsufficientSampling(
            f"grid spacing {du:.4g} coarser than "
            f"{MIN_POINTS_PER_DECADE} points per decade"
        )
    return -phi + _derivative_uniform(phi, du)


def energy_density(k_values, phi_values, z, m):
    """Trapezoid quadrature of (1/2pi) [(-k)^z cos 2phi - m sin 2phi] dk."""
    k = np.asarray(k_values, dtype=float)
    phi = np.asarray(phi_values, dtype=float)
    integrand = (-k) ** z * np.cos(2.0 * phi) - m * np.sin(2.0 * phi)
    return float(trapezoid(integrand, k) / (2.0 * np.pi))


def metric_guu(u, z, m, cutoff=1.0):
    """Radial metric component g_uu = g(u)^2 / 3."""
    g = g_closed_form(u, z, m, cutoff)
    return g * g / 3.0


def geodesic_length(g_const, length, eps):
    """Geodesic length (2|g|/sqrt(3)) ln(l/eps) in a constant-g metric."""
    if length <= eps:
        raise DegenerateInterval(f"interval l={length} must exceed cutoff eps={eps}")
    return (2.0 * abs(g_const) / SQRT3) * math.log(length / eps)


def geodesic_length_massive(z, m, cutoff, length, eps, n_points=4001):
    """Semicircle-ansatz geodesic length in the u-dependent massive metric.

    Quadrature of (2 pi / sqrt 3) * integral_alpha^(1/2) |g(u(t))| csc(pi t) dt
    along r(t) = (l/2) sin(pi t), u(t) = ln(eps / r(t)), alpha = 2 eps/(pi l).
    This is an ansatz (the constant-g case is the controlled one); it
    reduces to geodesic_length as m -> 0 up to the small-alpha expansion.
    """
    if length <= eps:
        raise DegenerateInterval(f"interval l={length} must exceed cutoff eps={eps}")
    alpha = 2.0 * eps / (math.pi * length)
    if alpha >= 0.5:
        raise ValueError("interval too short for the semicircle ansatz")
    t = np.linspace(alpha, 0.5, n_points)
    r = (length / 2.0) * np.sin(np.pi * t)
    u = np.log(eps / r)
    g = np.abs(g_closed_form(u, z, m, cutoff))
    integrand = g / np.sin(np.pi * t)
    return float((2.0 * np.pi / SQRT3) * trapezoid(integrand, t))


def ee_cmera(z, length, eps, c=2.0):
    """Holographic entropy closed form: (c/3) ln(l/eps) for odd z, 0 even."""
    if z % 2 == 0:
        return 0.0
    return (c / 3.0) * math.log(length / eps)
