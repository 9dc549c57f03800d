"""Dense complex-matrix kernel: adjoints, Kronecker products, traces, and
Hermitian eigenvalue extraction.

Thin contract-checked wrappers over numpy; every matrix in this package is
at most 8x8, so robustness matters and speed does not.
"""

from __future__ import annotations

import numpy as np

from .errors import NotHermitian

HERMITICITY_TOL = 1e-9

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, first factor most significant."""
    return np.kron(np.asarray(a), np.asarray(b))


def trace(m: np.ndarray) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(np.asarray(m)))


def hermiticity_deviation(m: np.ndarray) -> float:
    """Largest entrywise |M - M^dagger|."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def hermitian_eigenvalues(m: np.ndarray, hermiticity_tol: float = HERMITICITY_TOL) -> np.ndarray:
    """All real eigenvalues with multiplicity, sorted descending.

    Raises NotHermitian (reporting the deviation) if the input is not
    Hermitian within `hermiticity_tol`.
    """
    m = np.asarray(m, dtype=complex)
    dev = hermiticity_deviation(m)
    if dev > hermiticity_tol:
        raise NotHermitian(
            f"matrix is not Hermitian: max deviation {dev:.3e} exceeds {hermiticity_tol:.1e}"
        )
    return np.sort(np.linalg.eigvalsh(m))[::-1]
