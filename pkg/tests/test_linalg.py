import numpy as np
import pytest
from numpy.testing import assert_allclose

from dissension.errors import NotHermitian
from dissension.linalg import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    adjoint,
    hermitian_eigenvalues,
    hermiticity_deviation,
    kron,
    trace,
)


def test_adjoint_identity():
    assert_allclose(adjoint(np.eye(2)), np.eye(2))


def test_adjoint_pauli_y_hermitian():
    assert_allclose(adjoint(PAULI_Y), PAULI_Y)


def test_adjoint_nilpotent():
    m = np.array([[0, 1], [0, 0]], dtype=complex)
    assert_allclose(adjoint(m), np.array([[0, 0], [1, 0]]))


def test_adjoint_involution_exact():
    rng = np.random.default_rng(1)
    for _ in range(10):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert np.array_equal(adjoint(adjoint(m)), m)


def test_kron_identities():
    assert_allclose(kron(np.eye(2), np.eye(2)), np.eye(4))
    assert_allclose(kron(np.diag([1.0, 0.0]), np.eye(2)), np.diag([1.0, 1.0, 0.0, 0.0]))
    assert_allclose(kron(PAULI_Z, PAULI_Z), np.diag([1.0, -1.0, -1.0, 1.0]))


def test_kron_associative():
    rng = np.random.default_rng(2)
    for _ in range(5):
        mats = []
        for _ in range(3):
            m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            mats.append(m / np.linalg.norm(m))
        a, b, c = mats
        left = kron(kron(a, b), c)
        right = kron(a, kron(b, c))
        assert np.max(np.abs(left - right)) <= 1e-12


def test_hermitian_eigenvalues_diagonal():
    assert_allclose(hermitian_eigenvalues(PAULI_Z), [1.0, -1.0])
    assert_allclose(hermitian_eigenvalues(np.eye(2) / 2), [0.5, 0.5])


def test_hermitian_eigenvalues_w_pair_reduction():
    # Pair reduction of the pure W state: one 1/3 diagonal entry plus the
    # block (1/3)[[1,1],[1,1]], whose eigenvalues are 2/3 and 0 by hand.
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[1, 1] = m[2, 2] = 1 / 3
    m[1, 2] = m[2, 1] = 1 / 3
    assert_allclose(hermitian_eigenvalues(m), [2 / 3, 1 / 3, 0.0, 0.0], atol=1e-12)


def test_hermitian_eigenvalues_rejects_non_hermitian():
    m = np.array([[0, 1], [0, 0]], dtype=complex)
    with pytest.raises(NotHermitian, match="deviation"):
        hermitian_eigenvalues(m)


def test_eigenvalue_sum_equals_trace():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        h = (g + g.conj().T) / 2
        eigs = hermitian_eigenvalues(h)
        assert np.all(np.diff(eigs) <= 1e-12)
        assert abs(eigs.sum() - trace(h).real) <= 1e-9


def test_kron_spectrum_is_pairwise_products():
    rng = np.random.default_rng(4)
    for _ in range(10):
        g1 = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        g2 = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        m = (g1 + g1.conj().T) / 2
        n = (g2 + g2.conj().T) / 2
        got = np.sort(hermitian_eigenvalues(kron(m, n)))
        expected = np.sort([em * en for em in np.linalg.eigvalsh(m) for en in np.linalg.eigvalsh(n)])
        assert_allclose(got, expected, atol=1e-9)


def test_trace_values():
    assert trace(np.eye(8)) == 8
    assert trace(PAULI_X) == 0


def test_hermiticity_deviation_reports_magnitude():
    m = np.array([[0, 1], [0, 0]], dtype=complex)
    assert hermiticity_deviation(m) == pytest.approx(1.0)
