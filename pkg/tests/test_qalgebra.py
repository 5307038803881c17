import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from helpers import random_hermitian, random_ket
from zehmix import errors
from zehmix.qalgebra import (
    EPS_EIG,
    EPS_NORM,
    MINUS_X,
    MINUS_Z,
    PLUS_X,
    PLUS_Y,
    PLUS_Z,
    SX,
    SY,
    SZ,
    Ket,
    Observable,
    SpinDirection,
    evolve_pure,
    expectation,
    herm_eig,
    identity,
    make_ket,
    same_ray,
    spin_component,
    tensor,
    tensor_obs,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_make_ket_basis_vector_unchanged():
    k = make_ket([1, 0])
    np.testing.assert_array_equal(k.amplitudes, [1, 0])
    assert k.dim == 2


def test_make_ket_normalizes_to_plus_x():
    k = make_ket([1, 1])
    np.testing.assert_allclose(k.amplitudes, [2 ** -0.5, 2 ** -0.5], atol=1e-15)
    assert same_ray(k, PLUS_X)


@pytest.mark.parametrize("amps, exc", [([0, 0], errors.ZeroVector), ([], errors.EmptyInput)])
def test_make_ket_rejects_degenerate(amps, exc):
    with pytest.raises(exc):
        make_ket(amps)


def test_ket_constructor_requires_unit_norm():
    with pytest.raises(errors.NotNormalized):
        Ket([1, 1])


def test_ket_is_read_only():
    with pytest.raises(ValueError):
        PLUS_Z.amplitudes[0] = 2


@pytest.mark.parametrize("ket, obs, expected", [
    (PLUS_X, SX, 0.5),
    (PLUS_Y, SX, 0.0),
    (PLUS_Z, SZ, 0.5),
    (MINUS_X, SX, -0.5),
])
def test_expectation_values(ket, obs, expected):
    assert expectation(ket, obs) == pytest.approx(expected, abs=1e-15)


def test_expectation_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatch):
        expectation(make_ket([1, 0, 0]), SX)


def test_observable_must_be_hermitian():
    with pytest.raises(errors.NotHermitian):
        Observable([[0, 1], [0, 0]])


def test_spin_component_axes():
    np.testing.assert_array_equal(spin_component(SpinDirection([1, 0, 0])).matrix, [[0, 0.5], [0.5, 0]])
    np.testing.assert_array_equal(spin_component(SpinDirection([0, 0, 1])).matrix, [[0.5, 0], [0, -0.5]])
    np.testing.assert_array_equal(spin_component(SpinDirection([0, 1, 0])).matrix, SY.matrix)


def test_spin_component_rejects_non_unit():
    with pytest.raises(errors.NotUnitVector):
        spin_component(SpinDirection([0, 2, 0]))


def test_spin_direction_labels():
    assert SpinDirection([1, 0, 0]).label == "sx"
    assert SpinDirection([0, 0.6, 0.8]).label.startswith("dir:")


def test_herm_eig_sz():
    values, vectors = herm_eig(SZ)
    np.testing.assert_allclose(values, [-0.5, 0.5])
    assert same_ray(vectors[0], MINUS_Z) and same_ray(vectors[1], PLUS_Z)


def test_herm_eig_sx():
    values, vectors = herm_eig(SX)
    np.testing.assert_allclose(values, [-0.5, 0.5])
    assert same_ray(vectors[0], MINUS_X) and same_ray(vectors[1], PLUS_X)


def test_herm_eig_degenerate_returns_orthonormal_basis():
    values, vectors = herm_eig(Observable(np.eye(2) / 2))
    np.testing.assert_allclose(values, [0.5, 0.5])
    V = np.column_stack([v.amplitudes for v in vectors])
    np.testing.assert_allclose(V.conj().T @ V, np.eye(2), atol=EPS_EIG)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("dim", [2, 3, 5, 16])
def test_herm_eig_reconstruction(seed, dim):
    rng = np.random.default_rng(seed)
    H = random_hermitian(rng, dim)
    values, vectors = herm_eig(H)
    assert np.all(np.diff(values) >= 0)
    rebuilt = sum(lam * v.projector() for lam, v in zip(values, vectors))
    assert np.max(np.abs(rebuilt - H.matrix)) <= EPS_EIG
    V = np.column_stack([v.amplitudes for v in vectors])
    assert np.max(np.abs(V.conj().T @ V - np.eye(dim))) <= EPS_EIG


def test_evolve_pure_zero_time_is_identity():
    rng = np.random.default_rng(3)
    k = random_ket(rng, 3)
    assert evolve_pure(k, random_hermitian(rng, 3), 0.0) is k


@pytest.mark.parametrize("t", [0.3, 1.0, 7.5])
def test_evolve_pure_eigenstate_stays_put(t):
    assert same_ray(evolve_pure(PLUS_Z, SZ, t), PLUS_Z)


def test_evolve_pure_x_to_y_closed_form():
    t = np.pi / 2
    # Closed-form two-level propagator diag(e^{-it/2}, e^{it/2}) applied by hand.
    by_hand = np.array([np.exp(-1j * t / 2), np.exp(1j * t / 2)]) / np.sqrt(2)
    out = evolve_pure(PLUS_X, SZ, t)
    assert same_ray(out, Ket(by_hand))
    assert same_ray(out, PLUS_Y)


@pytest.mark.parametrize("seed", range(5))
def test_evolve_pure_matches_expm(seed):
    rng = np.random.default_rng(seed)
    H = random_hermitian(rng, 4)
    k = random_ket(rng, 4)
    t = rng.uniform(-3, 3)
    expected = expm(-1j * t * H.matrix) @ k.amplitudes
    np.testing.assert_allclose(evolve_pure(k, H, t).amplitudes, expected, atol=1e-10)


def test_evolve_pure_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatch):
        evolve_pure(PLUS_Z, identity(3), 1.0)


def test_tensor_basis():
    np.testing.assert_array_equal(tensor(PLUS_Z, PLUS_Z).amplitudes, [1, 0, 0, 0])
    # subsystem-1 major: |+z>|-z> is index 1, |-z>|+z> is index 2
    np.testing.assert_array_equal(tensor(PLUS_Z, MINUS_Z).amplitudes, [0, 1, 0, 0])
    np.testing.assert_array_equal(tensor(MINUS_Z, PLUS_Z).amplitudes, [0, 0, 1, 0])


def test_tensor_obs_product_eigenstate():
    big = tensor_obs(SZ, identity(2))
    k = tensor(PLUS_Z, MINUS_Z)
    np.testing.assert_allclose(big.matrix @ k.amplitudes, 0.5 * k.amplitudes)


@pytest.mark.parametrize("seed", range(10))
def test_tensor_expectation_factorizes(seed):
    rng = np.random.default_rng(seed)
    a, b = random_ket(rng, 2), random_ket(rng, 2)
    A, B = random_hermitian(rng, 2), random_hermitian(rng, 2)
    psi = tensor(a, b)
    # Direct 4x4 evaluation, written out without tensor_obs.
    direct = np.vdot(psi.amplitudes, np.kron(A.matrix, B.matrix) @ psi.amplitudes).real
    assert expectation(psi, tensor_obs(A, B)) == pytest.approx(direct, abs=1e-12)
    assert direct == pytest.approx(expectation(a, A) * expectation(b, B), abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(seed=seeds, phi=st.floats(min_value=-10, max_value=10))
def test_expectation_phase_invariant(seed, phi):
    rng = np.random.default_rng(seed)
    k = random_ket(rng, 3)
    O = random_hermitian(rng, 3)
    shifted = Ket(np.exp(1j * phi) * k.amplitudes)
    assert abs(expectation(shifted, O) - expectation(k, O)) <= EPS_EIG


@settings(max_examples=50, deadline=None)
@given(seed=seeds)
def test_spin_component_spectrum_and_bounds(seed):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=3)
    O = spin_component(SpinDirection(v / np.linalg.norm(v)))
    values, _ = herm_eig(O)
    np.testing.assert_allclose(values, [-0.5, 0.5], atol=EPS_EIG)
    assert -0.5 - EPS_EIG <= expectation(random_ket(rng, 2), O) <= 0.5 + EPS_EIG


@settings(max_examples=50, deadline=None)
@given(seed=seeds, t=st.floats(min_value=-50, max_value=50))
def test_evolve_pure_preserves_norm(seed, t):
    rng = np.random.default_rng(seed)
    k = random_ket(rng, 4)
    out = evolve_pure(k, random_hermitian(rng, 4), t)
    assert abs(np.linalg.norm(out.amplitudes) - 1) <= EPS_NORM
