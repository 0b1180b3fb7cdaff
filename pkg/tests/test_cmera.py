import math

import numpy as np
import pytest
from scipy.integrate import trapezoid

from eechain import (
    DegenerateInterval,
    InsufficientSampling,
    bogoliubov_angle,
    ee_cmera,
    energy_density,
    g_closed_form,
    g_from_phi_numeric,
    geodesic_length,
    geodesic_length_massive,
    metric_guu,
    minimizing_angle,
)

PI = math.pi


def test_angle_massless_limits():
    for z in (1, 3, 5):
        assert bogoliubov_angle(0.7, z, 0.0) == pytest.approx(PI / 2, abs=1e-14)
    for z in (2, 4):
        assert bogoliubov_angle(0.7, z, 0.0) == pytest.approx(0.0, abs=1e-14)


def test_angle_heavy_mass_limits():
    assert bogoliubov_angle(1.0, 1, 1e12) == pytest.approx(PI / 4, abs=1e-9)
    assert bogoliubov_angle(1.0, 2, 1e12) == pytest.approx(-PI / 4, abs=1e-9)


def test_angle_rejects_nonpositive_momenta():
    with pytest.raises(ValueError):
        bogoliubov_angle(0.0, 1, 0.5)
    with pytest.raises(ValueError):
        bogoliubov_angle(-1.0, 1, 0.5)


def test_minimizing_angle_tangent_relation():
    for k, z, m in [(0.5, 1, 0.8), (1.3, 2, 0.4), (-0.7, 3, 1.1), (2.0, 5, 0.0)]:
        phi = minimizing_angle(k, z, m)
        lhs = math.tan(2 * phi)
        rhs = -m / (-k) ** z
        assert lhs == pytest.approx(rhs, abs=1e-10)


def test_minimizing_angle_massless_branches():
    # odd z: the minimizer flips across k = 0
    assert minimizing_angle(0.5, 1, 0.0) == pytest.approx(0.0, abs=1e-14)
    assert minimizing_angle(-0.5, 1, 0.0) == pytest.approx(PI / 2, abs=1e-14)
    # even z: always pi/2 (the dispersion term is positive either side)
    assert minimizing_angle(0.5, 2, 0.0) == pytest.approx(PI / 2, abs=1e-14)
    assert minimizing_angle(-0.5, 2, 0.0) == pytest.approx(PI / 2, abs=1e-14)


def test_g_massless_constants():
    u = np.linspace(-3, 0, 7)
    np.testing.assert_allclose(g_closed_form(u, 1, 0.0), -PI / 2, atol=1e-15)
    np.testing.assert_allclose(g_closed_form(u, 2, 0.0), 0.0, atol=1e-15)


def test_g_massive_value_at_u0():
    # z=1, m=1, cutoff=1 at u=0: -phi(1) + 1/(2*omega^2) = -3 pi/8 + 1/4
    val = g_closed_form(np.array([0.0]), 1, 1.0)[0]
    assert val == pytest.approx(-3 * PI / 8 + 0.25, rel=1e-14)


def test_g_cutoff_rescaling():
    u = np.linspace(-4, -1, 11)
    shifted = g_closed_form(u + math.log(2.0), 1, 0.6, cutoff=1.0)
    scaled = g_closed_form(u, 1, 0.6, cutoff=2.0)
    np.testing.assert_allclose(scaled, shifted, atol=1e-14)


@pytest.mark.parametrize("z,m", [(1, 1.0), (2, 0.7), (3, 0.2)])
def test_numeric_inversion_matches_closed_form(z, m):
    u = np.linspace(-5.0, 0.0, 2001)
    phi = bogoliubov_angle(np.exp(u), z, m)
    got = g_from_phi_numeric(u, phi)
    want = g_closed_form(u, z, m)
    assert np.abs(got - want).max() < 1e-6


def test_numeric_inversion_sampling_gates():
    u = np.linspace(-5.0, 0.0, 100)  # du = 0.0505 > ln(10)/100
    phi = bogoliubov_angle(np.exp(u), 1, 1.0)
    with pytest.raises(InsufficientSampling):
        g_from_phi_numeric(u, phi)
    bad_u = np.r_[np.linspace(-5, -1, 500), np.linspace(-0.99, 0, 300)]
    with pytest.raises(InsufficientSampling):
        g_from_phi_numeric(bad_u, np.zeros_like(bad_u))


def test_energy_minimizer_beats_constant_profiles():
    z, m = 1, 0.5
    k = np.linspace(1e-3, 1.0, 2000)
    phi_min = minimizing_angle(k, z, m)
    e_min = energy_density(k, phi_min, z, m)
    omega = np.sqrt(k ** (2 * z) + m * m)
    assert e_min == pytest.approx(-trapezoid(omega, k) / (2 * PI), rel=1e-12)
    for const in (0.0, PI / 4, PI / 2):
        assert e_min <= energy_density(k, np.full_like(k, const), z, m) + 1e-15


def test_energy_second_differences_nonnegative():
    z, m = 2, 0.8
    k = np.linspace(1e-3, 1.0, 600)
    phi = minimizing_angle(k, z, m)
    e0 = energy_density(k, phi, z, m)
    rng = np.random.default_rng(11)
    for _ in range(5):
        delta = 0.3 * rng.standard_normal(k.size)
        second = (
            energy_density(k, phi + delta, z, m)
            + energy_density(k, phi - delta, z, m)
            - 2 * e0
        )
        assert second >= -1e-12


def test_metric_values():
    u = np.linspace(-6, 0, 13)
    np.testing.assert_allclose(metric_guu(u, 1, 0.0), PI**2 / 12, atol=1e-14)
    np.testing.assert_allclose(metric_guu(u, 4, 0.0), 0.0, atol=1e-15)
    assert metric_guu(-10.0, 1, 1.0) == pytest.approx(PI**2 / 48, rel=1e-10)


def test_geodesic_constant_metric():
    assert geodesic_length(PI / 2, math.e, 1.0) == pytest.approx(
        PI / math.sqrt(3), abs=1e-12
    )
    with pytest.raises(DegenerateInterval):
        geodesic_length(PI / 2, 1.0, 1.0)
    with pytest.raises(DegenerateInterval):
        geodesic_length(PI / 2, 0.5, 1.0)


def test_geodesic_massive_limits():
    # vanishing mass reproduces the constant-g closed form
    light = geodesic_length_massive(1, 1e-12, 1.0, 100.0, 1.0)
    const = geodesic_length(PI / 2, 100.0, 1.0)
    assert light == pytest.approx(const, rel=1e-5)
    # a gap shortens the geodesic (less IR entanglement)
    heavy = geodesic_length_massive(1, 1.0, 1.0, 100.0, 1.0)
    assert heavy < light
    with pytest.raises(DegenerateInterval):
        geodesic_length_massive(1, 0.5, 1.0, 0.9, 1.0)
    with pytest.raises(ValueError):
        # interval too short for the semicircle parameterization
        geodesic_length_massive(1, 0.5, 1.0, 1.05, 1.0)


def test_ee_closed_form():
    assert ee_cmera(1, 100.0, 1.0) == pytest.approx((2 / 3) * math.log(100))
    assert ee_cmera(3, 50.0, 2.0) == pytest.approx((2 / 3) * math.log(25))
    assert ee_cmera(2, 100.0, 1.0) == 0.0
    assert ee_cmera(8, 7.0, 1.0) == 0.0
    # c is adjustable
    assert ee_cmera(1, 10.0, 1.0, c=3.0) == pytest.approx(math.log(10))
