"""Validated density matrices, the named state families, partial trace,
projection, and operator embedding.

Ordering convention used everywhere: the computational-basis index of an
n-qubit state is read with qubit 0 as the most significant bit, so for
three qubits |b0 b1 b2> sits at index 4*b0 + 2*b1 + b2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadSubset, InvalidParam, NotAState, NotProjector
from .linalg import hermiticity_deviation

HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
PSD_TOL = 1e-9
NORM_TOL = 1e-9
PROJECTOR_TOL = 1e-9

# Measurement branches with probability at or below this cutoff are treated
# as unreachable.
BRANCH_PROB_CUTOFF = 1e-12

DEFAULT_BISEPARABLE_A = 0.25

FAMILIES = ("ghz", "w", "mixed_ghz", "mixed_w", "biseparable", "pure_vector", "raw_matrix")


def state_diagnostics(matrix: np.ndarray) -> dict:
    """Deviations of `matrix` from the density-matrix invariants."""
    m = np.asarray(matrix, dtype=complex)
    herm = hermiticity_deviation(m)
    tr = abs(complex(np.trace(m)) - 1.0)
    if herm <= HERMITIAN_TOL:
        min_eig = float(np.min(np.linalg.eigvalsh(m)))
    else:
        min_eig = float("nan")
    return {
        "hermiticity_deviation": herm,
        "trace_deviation": tr,
        "min_eigenvalue": min_eig,
    }


class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace operator on 1..3 qubits.

    The wrapped array is validated on construction and frozen afterwards.
    """

    __slots__ = ("matrix", "num_qubits")

    def __init__(self, matrix: np.ndarray):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotAState(f"expected a square matrix, got shape {m.shape}")
        dim = m.shape[0]
        n = dim.bit_length() - 1
        if 2**n != dim or not 1 <= n <= 3:
            raise NotAState(f"dimension {dim} is not 2^n for n in 1..3")
        herm = hermiticity_deviation(m)
        if herm > HERMITIAN_TOL:
            raise NotAState(f"hermiticity deviation {herm:.3e}")
        tr_dev = abs(complex(np.trace(m)) - 1.0)
        if tr_dev > TRACE_TOL:
            raise NotAState(f"trace deviation {tr_dev:.3e}")
        min_eig = float(np.min(np.linalg.eigvalsh(m)))
        if min_eig < -PSD_TOL:
            raise NotAState(f"negative eigenvalue {min_eig:.3e}")
        m.flags.writeable = False
        self.matrix = m
        self.num_qubits = n

    @property
    def dim(self) -> int:
        return 2**self.num_qubits

    def __repr__(self) -> str:
        return f"DensityMatrix(num_qubits={self.num_qubits})"


@dataclass(frozen=True)
class StateSpec:
    """Description of a named state family and its parameters."""

    family: str
    a: float | None = None
    amplitudes: Sequence[complex] | None = None
    entries: np.ndarray | None = field(default=None, compare=False)


def pure_state(amplitudes: Sequence[complex]) -> DensityMatrix:
    """Rank-1 density matrix |psi><psi| of a normalized amplitude vector."""
    v = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > NORM_TOL:
        raise InvalidParam(f"amplitudes have norm {norm}, expected 1")
    return DensityMatrix(np.outer(v, v.conj()))


def ghz() -> DensityMatrix:
    """(|000> + |111>)/sqrt(2) as a density matrix."""
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1 / np.sqrt(2)
    return pure_state(v)


def w() -> DensityMatrix:
    """(|100> + |010> + |001>)/sqrt(3) as a density matrix."""
    v = np.zeros(8, dtype=complex)
    v[4] = v[2] = v[1] = 1 / np.sqrt(3)
    return pure_state(v)


def _mixed_with_identity(pure: DensityMatrix, a: float) -> DensityMatrix:
    if not 0.0 <= a <= 1.0:
        raise InvalidParam(f"mixing weight a={a} outside [0, 1]")
    dim = pure.dim
    return DensityMatrix((1 - a) * np.eye(dim) / dim + a * pure.matrix)


def mixed_ghz(a: float) -> DensityMatrix:
    """(1-a) I/8 + a |GHZ><GHZ|."""
    return _mixed_with_identity(ghz(), a)


def mixed_w(a: float) -> DensityMatrix:
    """(1-a) I/8 + a |W><W|."""
    return _mixed_with_identity(w(), a)


def biseparable(a: float = DEFAULT_BISEPARABLE_A) -> DensityMatrix:
    """Product of |0> on qubit 0 with a two-Bell-state mixture on qubits 1,2.

    Equals 2a |0,phi+><0,phi+| + 2b |0,psi-><0,psi-| with b = 1/2 - a,
    phi+ = (|00>+|11>)/sqrt(2) and psi- = (|01>-|10>)/sqrt(2).
    """
    if not 0.0 <= a <= 0.5:
        raise InvalidParam(f"biseparable weight a={a} outside [0, 1/2]")
    b = 0.5 - a
    m = np.zeros((8, 8), dtype=complex)
    m[0, 0] = m[3, 3] = m[0, 3] = m[3, 0] = a
    m[1, 1] = m[2, 2] = b
    m[1, 2] = m[2, 1] = -b
    return DensityMatrix(m)


def make_state(spec: StateSpec) -> DensityMatrix:
    """Build the density matrix described by a StateSpec."""
    fam = spec.family
    if fam == "ghz":
        return ghz()
    if fam == "w":
        return w()
    if fam == "mixed_ghz":
        if spec.a is None:
            raise InvalidParam("mixed_ghz requires a mixing weight a")
        return mixed_ghz(spec.a)
    if fam == "mixed_w":
        if spec.a is None:
            raise InvalidParam("mixed_w requires a mixing weight a")
        return mixed_w(spec.a)
    if fam == "biseparable":
        return biseparable(DEFAULT_BISEPARABLE_A if spec.a is None else spec.a)
    if fam == "pure_vector":
        if spec.amplitudes is None:
            raise InvalidParam("pure_vector requires an amplitude list")
        return pure_state(spec.amplitudes)
    if fam == "raw_matrix":
        if spec.entries is None:
            raise InvalidParam("raw_matrix requires matrix entries")
        return DensityMatrix(spec.entries)
    raise InvalidParam(f"unknown state family {fam!r}; expected one of {FAMILIES}")


def _check_subset(qubits: Sequence[int], total: int, *, strict: bool) -> list[int]:
    qs = [int(q) for q in qubits]
    if not qs:
        raise BadSubset("empty qubit selection")
    if len(set(qs)) != len(qs):
        raise BadSubset(f"duplicate qubits in {qs}")
    if any(q < 0 or q >= total for q in qs):
        raise BadSubset(f"qubits {qs} out of range for {total}-qubit state")
    if strict and len(qs) >= total:
        raise BadSubset("must keep a strict subset of the qubits")
    return qs


def _reduce_matrix(matrix: np.ndarray, num_qubits: int, keep: Sequence[int]) -> np.ndarray:
    """Partial trace of a raw 2^n x 2^n matrix onto `keep`, in listed order."""
    keep = list(keep)
    traced = [q for q in range(num_qubits) if q not in keep]
    perm = keep + traced
    t = matrix.reshape([2] * (2 * num_qubits))
    t = t.transpose(perm + [num_qubits + p for p in perm])
    dk = 2 ** len(keep)
    dt = 2 ** len(traced)
    return np.einsum("ijkj->ik", t.reshape(dk, dt, dk, dt))


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Reduced state over `keep` (in listed order, first qubit most significant)."""
    qs = _check_subset(keep, rho.num_qubits, strict=True)
    return DensityMatrix(_reduce_matrix(rho.matrix, rho.num_qubits, qs))


def embed_operator(op: np.ndarray, targets: Sequence[int], total_qubits: int) -> np.ndarray:
    """Operator acting as `op` on `targets` (in listed order) and identity elsewhere."""
    op = np.asarray(op, dtype=complex)
    qs = _check_subset(targets, total_qubits, strict=False)
    k = len(qs)
    if op.shape != (2**k, 2**k):
        raise BadSubset(f"operator shape {op.shape} does not match {k} target qubits")
    if k == total_qubits and qs == list(range(total_qubits)):
        return op
    rest = [q for q in range(total_qubits) if q not in qs]
    full = np.kron(op, np.eye(2 ** len(rest), dtype=complex))
    order = qs + rest
    perm = [order.index(q) for q in range(total_qubits)]
    t = full.reshape([2] * (2 * total_qubits))
    t = t.transpose(perm + [total_qubits + p for p in perm])
    dim = 2**total_qubits
    return t.reshape(dim, dim)


def project(rho: DensityMatrix, projector: np.ndarray) -> tuple[float, DensityMatrix | None]:
    """Apply a full-dimension projector; return (probability, post state).

    The post state is None when the branch probability falls at or below
    BRANCH_PROB_CUTOFF.
    """
    p_mat = np.asarray(projector, dtype=complex)
    if p_mat.shape != rho.matrix.shape:
        raise NotProjector(f"projector shape {p_mat.shape} does not match state dim {rho.dim}")
    herm = hermiticity_deviation(p_mat)
    if herm > PROJECTOR_TOL:
        raise NotProjector(f"projector hermiticity deviation {herm:.3e}")
    idem = float(np.max(np.abs(p_mat @ p_mat - p_mat)))
    if idem > PROJECTOR_TOL:
        raise NotProjector(f"projector idempotence deviation {idem:.3e}")
    sandwiched = p_mat @ rho.matrix @ p_mat
    prob = min(max(float(np.trace(sandwiched).real), 0.0), 1.0)
    if prob <= BRANCH_PROB_CUTOFF:
        return prob, None
    return prob, DensityMatrix(sandwiched / prob)
