import numpy as np
import pytest

from entfid.states import (DensityMatrix, PureState, bell_pure, bell_state,
                           from_pure, maximally_mixed, purity, reduced_state)

rng = np.random.default_rng(7)


def random_density(dim, dims=None):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    p = a @ a.conj().T
    return DensityMatrix(p / np.trace(p).real, dims or (dim,))


def test_density_matrix_rejects_non_hermitian():
    m = np.array([[0.5, 0.5], [0.0, 0.5]])
    with pytest.raises(ValueError, match="Hermitian"):
        DensityMatrix(m, (2,))


def test_density_matrix_rejects_bad_trace():
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix(np.eye(2), (2,))


def test_density_matrix_rejects_negative_eigenvalue():
    with pytest.raises(ValueError, match="PSD"):
        DensityMatrix(np.diag([1.5, -0.5]), (2,))


def test_density_matrix_rejects_dims_mismatch():
    with pytest.raises(ValueError, match="subsystem_dims"):
        DensityMatrix(np.eye(4) / 4, (2, 3))


def test_density_matrix_is_frozen():
    rho = maximally_mixed(2)
    with pytest.raises(Exception):
        rho.matrix[0, 0] = 9.0


def test_pure_state_rejects_unnormalized():
    with pytest.raises(ValueError, match="norm"):
        PureState(np.array([1.0, 1.0]), (2,))


def test_bell_state_entries():
    plus = bell_state("+").matrix
    want = np.zeros((4, 4))
    want[1, 1] = want[2, 2] = want[1, 2] = want[2, 1] = 0.5
    assert np.array_equal(plus, want)

    minus = bell_state("-").matrix
    assert minus[1, 2] == -0.5 and minus[2, 1] == -0.5
    assert minus[1, 1] == 0.5 and minus[2, 2] == 0.5


def test_bell_state_is_pure():
    for sign in "+-":
        rho = bell_state(sign)
        assert abs(np.trace(rho.matrix) - 1) < 1e-15
        assert abs(purity(rho) - 1.0) < 1e-12


def test_bell_state_bad_sign():
    with pytest.raises(ValueError, match="sign"):
        bell_state("x")


def test_bell_pure_matches_projector():
    for sign in "+-":
        assert np.max(np.abs(from_pure(bell_pure(sign)).matrix
                             - bell_state(sign).matrix)) < 1e-15


def test_maximally_mixed():
    assert np.array_equal(maximally_mixed(2).matrix, 0.5 * np.eye(2))
    assert maximally_mixed(1).matrix[0, 0] == 1.0
    assert abs(purity(maximally_mixed(4)) - 0.25) < 1e-15


def test_from_pure_basis_state():
    psi = PureState(np.array([1.0, 0.0]), (2,))
    assert np.array_equal(from_pure(psi).matrix, np.diag([1.0, 0.0]))


def test_from_pure_projector_idempotent():
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi = PureState(v / np.linalg.norm(v), (2, 2))
    p = from_pure(psi).matrix
    assert np.max(np.abs(p @ p - p)) < 1e-12


def test_reduced_state_of_bell_is_maximally_mixed():
    for sign in "+-":
        for keep in (0, 1):
            red = reduced_state(bell_state(sign), keep)
            assert np.max(np.abs(red.matrix - 0.5 * np.eye(2))) < 1e-12


def test_reduced_state_of_product():
    a = random_density(2)
    b = random_density(2)
    joint = DensityMatrix(np.kron(a.matrix, b.matrix), (2, 2))
    assert np.max(np.abs(reduced_state(joint, 0).matrix - a.matrix)) < 1e-12
    assert np.max(np.abs(reduced_state(joint, 1).matrix - b.matrix)) < 1e-12


def test_reduced_state_matches_summation_oracle():
    rho = random_density(4, (2, 2))
    got = reduced_state(rho, 0).matrix
    want = np.zeros((2, 2), dtype=complex)
    t = rho.matrix.reshape(2, 2, 2, 2)
    for i in range(2):
        for j in range(2):
            for b in range(2):
                want[i, j] += t[i, b, j, b]
    assert np.max(np.abs(got - want)) < 1e-14


def test_reduced_state_three_factors():
    rho = random_density(8, (2, 2, 2))
    red = reduced_state(rho, 1)
    assert red.subsystem_dims == (2,)
    assert abs(np.trace(red.matrix) - 1) < 1e-12


def test_reduced_state_needs_multiple_factors():
    with pytest.raises(ValueError, match="factors"):
        reduced_state(maximally_mixed(4), 0)


def test_purity_of_equal_bell_mixture():
    mix = DensityMatrix(0.5 * bell_state("+").matrix + 0.5 * bell_state("-").matrix,
                        (2, 2))
    assert abs(purity(mix) - 0.5) < 1e-12
