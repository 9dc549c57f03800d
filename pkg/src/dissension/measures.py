"""Entropic correlation measures for up to three qubits.

Covers von Neumann entropy, measurement-conditioned entropies under the
one-parameter projective bases, two-variable mutual information and
discord, the three-variable quantities I/J/K, the dissensions D1 and D2
with their minima delta1/delta2, the discord decomposition of D1,
two-qubit concurrence, and the negative-mutual-information demonstration.

All entropies are in bits. Measurement bases are the real one-parameter
families

    single qubit:  |u1> = cos(t)|0> + sin(t)|1>,  |u2> = sin(t)|0> - cos(t)|1>
    qubit pair:    |v1> = cos(t)|00> + sin(t)|11>, |v2> = -sin(t)|00> + cos(t)|11>,
                   |v3> = cos(t)|01> + sin(t)|10>, |v4> = -sin(t)|01> + cos(t)|10>
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BadSubset, InvalidParam, NegativeArgument, NotAState
from .linalg import PAULI_Y
from .states import (
    BRANCH_PROB_CUTOFF,
    PSD_TOL,
    DensityMatrix,
    _reduce_matrix,
    embed_operator,
)

DEFAULT_GRID_POINTS = 720
DEFAULT_REFINE_TOL = 1e-8

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QubitLabeling:
    """Assignment of the roles X, Y, Z to physical qubit positions."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if sorted((self.x, self.y, self.z)) != [0, 1, 2]:
            raise BadSubset(f"labeling {(self.x, self.y, self.z)} must cover qubits 0,1,2")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


DEFAULT_LABELING = QubitLabeling(0, 1, 2)


def _labeling(lab) -> QubitLabeling:
    if isinstance(lab, QubitLabeling):
        return lab
    return QubitLabeling(*lab)


@dataclass(frozen=True)
class MinimizationResult:
    """Outcome of a scalar minimization over the basis angle t."""

    value: float
    argmin_t: float
    grid_points: int
    refine_tol: float
    evaluations: int
    argmin_angles: tuple[float, float, float] | None = None


@dataclass(frozen=True)
class MeasureValue:
    """A computed measure with its provenance."""

    measure: str
    value: float
    t: float | None
    labeling: tuple[int, int, int]
    state_descriptor: str


def single_qubit_vectors(t: float) -> list[np.ndarray]:
    c, s = math.cos(t), math.sin(t)
    return [np.array([c, s], dtype=complex), np.array([s, -c], dtype=complex)]


def single_qubit_projectors(t: float) -> list[np.ndarray]:
    """The two rank-1 projectors of the single-qubit basis at angle t."""
    return [np.outer(v, v.conj()) for v in single_qubit_vectors(t)]


def two_qubit_vectors(t: float) -> list[np.ndarray]:
    c, s = math.cos(t), math.sin(t)
    return [
        np.array([c, 0, 0, s], dtype=complex),
        np.array([-s, 0, 0, c], dtype=complex),
        np.array([0, c, s, 0], dtype=complex),
        np.array([0, -s, c, 0], dtype=complex),
    ]


def two_qubit_projectors(t: float) -> list[np.ndarray]:
    """The four rank-1 projectors of the qubit-pair basis at angle t."""
    return [np.outer(v, v.conj()) for v in two_qubit_vectors(t)]


def _entropy_from_eigs(eigs: np.ndarray) -> float:
    vals = np.asarray(eigs, dtype=float)
    mn = float(vals.min())
    if mn < -PSD_TOL:
        raise NotAState(f"negative eigenvalue {mn:.3e}")
    vals = np.clip(vals, 0.0, 1.0)
    nz = vals[vals > 0.0]
    return max(0.0, float(-np.sum(nz * np.log2(nz))))


def _entropy_matrix(m: np.ndarray) -> float:
    return _entropy_from_eigs(np.linalg.eigvalsh(m))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-Tr(rho log2 rho) with eigenvalues clamped into [0, 1]."""
    return _entropy_matrix(rho.matrix)


def shannon_pair(x: float, y: float) -> float:
    """-x log2 x - y log2 y with the 0 log 0 = 0 convention.

    The arguments need not sum to 1, so the result may be negative.
    """
    if x < 0 or y < 0:
        raise NegativeArgument(f"shannon_pair arguments must be nonnegative, got ({x}, {y})")
    out = 0.0
    if x > 0:
        out -= x * math.log2(x)
    if y > 0:
        out -= y * math.log2(y)
    return out


def _entropy_of(rho: DensityMatrix, roles: Sequence[int] | None = None) -> float:
    """Entropy of the reduction of `rho` onto `roles` (all qubits if None)."""
    if roles is None or len(roles) == rho.num_qubits:
        return _entropy_matrix(rho.matrix)
    return _entropy_matrix(_reduce_matrix(rho.matrix, rho.num_qubits, list(roles)))


def measurement_branches(
    rho: DensityMatrix, measured: Sequence[int], t: float
) -> list[tuple[float, np.ndarray]]:
    """Projective-measurement branches (probability, normalized post state).

    Measures the listed qubits in the angle-t basis (single-qubit family for
    one qubit, pair family for two). Branches with probability at or below
    BRANCH_PROB_CUTOFF are dropped.
    """
    measured = list(measured)
    if len(measured) == 1:
        projectors = single_qubit_projectors(t)
    elif len(measured) == 2:
        projectors = two_qubit_projectors(t)
    else:
        raise BadSubset(f"measurement supports 1 or 2 qubits, got {len(measured)}")
    branches = []
    for proj in projectors:
        full = embed_operator(proj, measured, rho.num_qubits)
        sandwiched = full @ rho.matrix @ full
        prob = min(max(float(np.trace(sandwiched).real), 0.0), 1.0)
        if prob > BRANCH_PROB_CUTOFF:
            branches.append((prob, sandwiched / prob))
    return branches


def conditional_entropy(
    rho: DensityMatrix, kept: Sequence[int], measured: Sequence[int], t: float
) -> float:
    """Average entropy of the `kept` qubits after measuring `measured` at angle t."""
    kept = list(kept)
    measured = list(measured)
    if not kept or not measured:
        raise BadSubset("kept and measured must both be nonempty")
    if set(kept) & set(measured):
        raise BadSubset(f"kept {kept} and measured {measured} overlap")
    n = rho.num_qubits
    if any(q < 0 or q >= n for q in kept + measured):
        raise BadSubset(f"qubits out of range for {n}-qubit state")
    total = 0.0
    for prob, post in measurement_branches(rho, measured, t):
        total += prob * _entropy_matrix(_reduce_matrix(post, n, kept))
    return total


def mutual_information_2(rho: DensityMatrix, t: float, kept: int = 0, measured: int = 1) -> float:
    """H(kept) - H(kept | measurement on the other qubit) for a two-qubit state."""
    if rho.num_qubits != 2:
        raise BadSubset("mutual_information_2 expects a two-qubit state")
    return _entropy_of(rho, [kept]) - conditional_entropy(rho, [kept], [measured], t)


def discord(rho: DensityMatrix, kept: Sequence[int], measured: Sequence[int], t: float) -> float:
    """H(measured) - H(kept,measured) + H(kept | measurement at angle t)."""
    kept = list(kept)
    measured = list(measured)
    h_measured = _entropy_of(rho, measured)
    h_joint = _entropy_of(rho, kept + measured)
    return h_measured - h_joint + conditional_entropy(rho, kept, measured, t)


def min_discord(
    rho: DensityMatrix,
    kept: Sequence[int],
    measured: Sequence[int],
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> MinimizationResult:
    """Discord minimized over the measurement angle."""
    return minimize_over_t(
        lambda t: discord(rho, kept, measured, t), grid_points=grid_points, refine_tol=refine_tol
    )


def _require_three_qubits(rho: DensityMatrix, name: str) -> None:
    if rho.num_qubits != 3:
        raise BadSubset(f"{name} expects a three-qubit state")


def j3(rho: DensityMatrix, labeling=DEFAULT_LABELING) -> float:
    """Sum of single entropies minus pair entropies plus the joint entropy.

    Measurement-free; identically zero for pure three-qubit states.
    """
    _require_three_qubits(rho, "j3")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    singles = _entropy_of(rho, [x]) + _entropy_of(rho, [y]) + _entropy_of(rho, [z])
    pairs = _entropy_of(rho, [x, y]) + _entropy_of(rho, [x, z]) + _entropy_of(rho, [y, z])
    return singles - pairs + _entropy_of(rho)


def _angles(t) -> tuple[float, float, float]:
    if np.isscalar(t):
        return (float(t), float(t), float(t))
    tx, ty, tz = t
    return (float(tx), float(ty), float(tz))


def i3(rho: DensityMatrix, labeling=DEFAULT_LABELING, t: float = 0.0) -> float:
    """Three-variable mutual information with single-qubit measured conditionals.

    All conditional terms share the angle t unless a (t_x, t_y, t_z) triple
    is supplied.
    """
    _require_three_qubits(rho, "i3")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    tx, ty, tz = _angles(t)
    n = rho.num_qubits
    h_x_given_z = h_y_given_z = h_xy_given_z = 0.0
    for prob, post in measurement_branches(rho, [z], tz):
        h_x_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [x]))
        h_y_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [y]))
        h_xy_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [x, y]))
    return (
        _entropy_of(rho, [x, y])
        - conditional_entropy(rho, [y], [x], tx)
        - conditional_entropy(rho, [x], [y], ty)
        - h_x_given_z
        - h_y_given_z
        + h_xy_given_z
    )


def k3(rho: DensityMatrix, labeling=DEFAULT_LABELING, t: float = 0.0) -> float:
    """Three-variable mutual information with a pair-measured conditional on (Y,Z)."""
    _require_three_qubits(rho, "k3")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    singles = _entropy_of(rho, [x]) + _entropy_of(rho, [y]) + _entropy_of(rho, [z])
    return (
        singles
        - _entropy_of(rho, [x, y])
        - _entropy_of(rho, [x, z])
        + conditional_entropy(rho, [x], [y, z], float(t))
    )


def d1(rho: DensityMatrix, labeling=DEFAULT_LABELING, t: float = 0.0) -> float:
    """Dissension under single-qubit measurements at angle t.

    Evaluates the fully expanded difference of the measured and
    measurement-free three-variable mutual informations; equal to
    i3(...) - j3(...) up to round-off.
    """
    _require_three_qubits(rho, "d1")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    tx, ty, tz = _angles(t)
    n = rho.num_qubits
    h_x_given_z = h_y_given_z = h_xy_given_z = 0.0
    for prob, post in measurement_branches(rho, [z], tz):
        h_x_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [x]))
        h_y_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [y]))
        h_xy_given_z += prob * _entropy_matrix(_reduce_matrix(post, n, [x, y]))
    return (
        h_xy_given_z
        + _entropy_of(rho, [x, z])
        + _entropy_of(rho, [y, z])
        + 2.0 * _entropy_of(rho, [x, y])
        - _entropy_of(rho)
        - conditional_entropy(rho, [x], [y], ty)
        - h_x_given_z
        - h_y_given_z
        - conditional_entropy(rho, [y], [x], tx)
        - (_entropy_of(rho, [x]) + _entropy_of(rho, [y]) + _entropy_of(rho, [z]))
    )


def d2(rho: DensityMatrix, labeling=DEFAULT_LABELING, t: float = 0.0) -> float:
    """Dissension under a pair measurement on (Y,Z) at angle t.

    Other measured pairs are reached by relabeling the roles.
    """
    _require_three_qubits(rho, "d2")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    return (
        conditional_entropy(rho, [x], [y, z], float(t))
        + _entropy_of(rho, [y, z])
        - _entropy_of(rho)
    )


def d1_via_discords(rho: DensityMatrix, labeling=DEFAULT_LABELING, t: float = 0.0) -> float:
    """Dissension D1 assembled from five discords at one shared angle."""
    _require_three_qubits(rho, "d1_via_discords")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    t = float(t)
    return (
        discord(rho, [x, y], [z], t)
        - discord(rho, [x], [z], t)
        - discord(rho, [y], [z], t)
        - discord(rho, [x], [y], t)
        - discord(rho, [y], [x], t)
    )


def minimize_over_t(
    f: Callable[[float], float],
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> MinimizationResult:
    """Minimize a scalar function of t over [0, 2*pi).

    Coarse uniform scan followed by golden-section refinement around the
    best coarse sample; the returned value never exceeds any coarse sample.
    """
    if grid_points < 8:
        raise InvalidParam(f"grid_points must be at least 8, got {grid_points}")
    step = _TWO_PI / grid_points
    best_t = 0.0
    best_v = math.inf
    for k in range(grid_points):
        tk = k * step
        vk = f(tk)
        if vk < best_v:
            best_v, best_t = vk, tk
    evaluations = grid_points
    a, b = best_t - step, best_t + step
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    evaluations += 2
    while (b - a) > refine_tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        evaluations += 1
        for tt, vv in ((c, fc), (d, fd)):
            if vv < best_v:
                best_v, best_t = vv, tt
    return MinimizationResult(
        value=best_v,
        argmin_t=best_t % _TWO_PI,
        grid_points=grid_points,
        refine_tol=refine_tol,
        evaluations=evaluations,
    )


def delta1(
    rho: DensityMatrix,
    labeling=DEFAULT_LABELING,
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
    independent_angles: bool = False,
) -> MinimizationResult:
    """Minimum of d1 over the measurement angle.

    With independent_angles=True the three measured roles get their own
    angles, refined by coordinate descent from the shared-angle optimum.
    """
    lab = _labeling(labeling)
    shared = minimize_over_t(
        lambda t: d1(rho, lab, t), grid_points=grid_points, refine_tol=refine_tol
    )
    if not independent_angles:
        return shared
    angles = [shared.argmin_t] * 3
    evaluations = shared.evaluations
    best = shared.value
    for _ in range(3):
        for idx in range(3):
            def slice_f(tt, idx=idx):
                probe = list(angles)
                probe[idx] = tt
                return d1(rho, lab, tuple(probe))

            res = minimize_over_t(slice_f, grid_points=max(grid_points // 4, 8),
                                  refine_tol=refine_tol)
            evaluations += res.evaluations
            if res.value < best:
                best = res.value
                angles[idx] = res.argmin_t
    return MinimizationResult(
        value=best,
        argmin_t=angles[2],
        grid_points=grid_points,
        refine_tol=refine_tol,
        evaluations=evaluations,
        argmin_angles=tuple(angles),
    )


def delta2(
    rho: DensityMatrix,
    labeling=DEFAULT_LABELING,
    grid_points: int = DEFAULT_GRID_POINTS,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> MinimizationResult:
    """Minimum of d2 over the measurement angle."""
    lab = _labeling(labeling)
    return minimize_over_t(
        lambda t: d2(rho, lab, t), grid_points=grid_points, refine_tol=refine_tol
    )


def concurrence(rho: DensityMatrix) -> float:
    """Two-qubit concurrence from the spin-flipped spectrum.

    max(0, l1 - l2 - l3 - l4) where the l_i are the descending square roots
    of the eigenvalues of rho (Y x Y) rho* (Y x Y).
    """
    if rho.num_qubits != 2:
        raise BadSubset("concurrence expects a two-qubit state")
    yy = np.kron(PAULI_Y, PAULI_Y)
    m = rho.matrix @ yy @ rho.matrix.conj() @ yy
    eigs = np.sort(np.sqrt(np.maximum(np.linalg.eigvals(m).real, 0.0)))[::-1]
    return max(0.0, float(eigs[0] - eigs[1] - eigs[2] - eigs[3]))


def negative_mi_demo(
    rho: DensityMatrix | None = None,
    t: float = math.pi / 4,
    labeling=DEFAULT_LABELING,
) -> tuple[float, float, float]:
    """Demonstration that three-variable mutual information can be negative.

    Returns (I(X:Y), I(X,Y|Z), I(X:Y:Z)) with every conditional measured at
    angle t. Defaults to the GHZ state in the Hadamard basis, which yields
    (0, 2, -2): conditioning on the measured Z outcome leaves X,Y in a Bell
    state, so the conditional mutual information exceeds the plain one.
    """
    if rho is None:
        from .states import ghz

        rho = ghz()
    _require_three_qubits(rho, "negative_mi_demo")
    lab = _labeling(labeling)
    x, y, z = lab.as_tuple()
    t = float(t)
    i2 = _entropy_of(rho, [x]) - conditional_entropy(rho, [x], [y], t)
    cond_mi = (
        conditional_entropy(rho, [x], [z], t)
        + conditional_entropy(rho, [y], [z], t)
        - conditional_entropy(rho, [x, y], [z], t)
    )
    return (i2, cond_mi, i2 - cond_mi)
