import numpy as np

from dissension import DensityMatrix, pure_state


def random_pure_state(rng, num_qubits=3) -> DensityMatrix:
    """Haar-like pure state from normalized complex Gaussian amplitudes."""
    dim = 2**num_qubits
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return pure_state(v / np.linalg.norm(v))


def random_mixed_state(rng, num_qubits=3) -> DensityMatrix:
    """Normalized random PSD matrix."""
    dim = 2**num_qubits
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)
