import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from eechain import (
    EigenvalueOutOfRange,
    LatticeSpec,
    NotHermitian,
    build_correlation_matrix,
    entanglement_entropy,
    entropy_of,
    hermitian_eigenvalues,
)

INF = math.inf


def binary_entropy(c):
    return -(c * math.log(c) + (1 - c) * math.log(1 - c))


def test_quarter_filling_value():
    got = entanglement_entropy([0.25, 0.25, 0.75, 0.75])
    assert got == pytest.approx(4 * binary_entropy(0.25), rel=1e-12)
    assert got == pytest.approx(2.249341, abs=5e-7)


def test_pure_eigenvalues_contribute_nothing():
    assert entanglement_entropy([0.0, 1.0]) == 0.0
    assert entanglement_entropy([1e-16, 1.0 - 1e-16, 0.5]) == math.log(2)
    assert entanglement_entropy([]) == 0.0


def test_clamping_and_range_gate():
    # within the clamp band: treated as pure
    assert entanglement_entropy([-0.5e-9, 1.0 + 0.5e-9]) == 0.0
    with pytest.raises(EigenvalueOutOfRange):
        entanglement_entropy([-2e-9, 0.5])
    with pytest.raises(EigenvalueOutOfRange):
        entanglement_entropy([0.5, 1.0 + 2e-9])


def test_matrix_inputs_accepted():
    corr = build_correlation_matrix(LatticeSpec(n_sites=8), INF, range(3))
    via_matrix = entanglement_entropy(corr)
    via_array = entanglement_entropy(corr.entries)
    via_eigs = entanglement_entropy(hermitian_eigenvalues(corr))
    assert via_matrix == via_eigs
    assert via_array == via_eigs


def test_hermiticity_gate():
    m = np.array([[0.5, 0.1], [0.3, 0.5]])
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(m)
    # asymmetry below the tolerance passes
    m = np.array([[0.5, 0.1], [0.1 + 1e-10, 0.5]])
    hermitian_eigenvalues(m)


def test_entropy_of_point():
    spec = LatticeSpec(n_sites=4, z_exponent=1)
    pt = entropy_of(spec, INF, range(2), keep_eigenvalues=True)
    assert pt.entropy == pytest.approx(
        4 * binary_entropy((2 - math.sqrt(2)) / 4), rel=1e-12
    )
    assert pt.params == {
        "n": 4,
        "na": 2,
        "z": 1,
        "mass": 0.0,
        "beta": INF,
        "epsilon": 1.0,
    }
    assert pt.eigenvalues.shape == (4,)
    assert entropy_of(spec, INF, range(2)).eigenvalues is None


@settings(max_examples=60, deadline=None)
@given(
    arrays(
        float,
        st.integers(1, 16),
        elements=st.floats(0.0, 1.0, allow_nan=False),
    )
)
def test_entropy_bounds_and_symmetry(eigs):
    s = entanglement_entropy(eigs)
    assert 0.0 <= s <= len(eigs) * math.log(2) + 1e-12
    # particle-hole mirrored spectrum has the same entropy
    assert entanglement_entropy(1.0 - eigs) == pytest.approx(s, abs=1e-12)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(2, 5).flatmap(
        lambda na: st.tuples(
            st.just(na),
            st.integers(0, 1),
            st.floats(0.2, 5.0),
            st.floats(0.0, 1.0),
        )
    )
)
def test_lattice_entropy_nonnegative(case):
    na, z_off, beta, mass = case
    spec = LatticeSpec(n_sites=12, z_exponent=1 + z_off, mass=mass)
    s = entropy_of(spec, beta, range(na)).entropy
    assert -1e-12 <= s <= 2 * na * math.log(2) + 1e-12
