import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import random_mixed_state
from dissension import (
    BadSubset,
    DensityMatrix,
    InvalidParam,
    NotAState,
    NotProjector,
    StateSpec,
    biseparable,
    embed_operator,
    ghz,
    make_state,
    mixed_ghz,
    mixed_w,
    partial_trace,
    project,
    pure_state,
    w,
)
from dissension.linalg import PAULI_Z


def bell_phi_plus():
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1 / np.sqrt(2)
    return np.outer(v, v.conj())


def test_ghz_entries():
    m = ghz().matrix
    expected = np.zeros((8, 8), dtype=complex)
    for i, j in [(0, 0), (0, 7), (7, 0), (7, 7)]:
        expected[i, j] = 0.5
    assert_allclose(m, expected, atol=1e-15)


def test_w_entries():
    m = w().matrix
    expected = np.zeros((8, 8), dtype=complex)
    for i in (1, 2, 4):
        for j in (1, 2, 4):
            expected[i, j] = 1 / 3
    assert_allclose(m, expected, atol=1e-15)


def test_mixed_ghz_at_zero_is_random_mixture():
    assert_allclose(mixed_ghz(0.0).matrix, np.eye(8) / 8, atol=1e-15)


def test_biseparable_matches_product_form():
    # 2a |0,phi+><0,phi+| + 2b |0,psi-><0,psi-| assembled independently.
    a = 0.25
    b = 0.5 - a
    zero = np.array([1, 0], dtype=complex)
    phi = np.zeros(4, dtype=complex)
    phi[0] = phi[3] = 1 / np.sqrt(2)
    psi = np.zeros(4, dtype=complex)
    psi[1] = 1 / np.sqrt(2)
    psi[2] = -1 / np.sqrt(2)
    v1 = np.kron(zero, phi)
    v2 = np.kron(zero, psi)
    expected = 2 * a * np.outer(v1, v1.conj()) + 2 * b * np.outer(v2, v2.conj())
    assert_allclose(biseparable(a).matrix, expected, atol=1e-15)


def test_make_state_dispatch():
    assert_allclose(make_state(StateSpec("ghz")).matrix, ghz().matrix)
    assert_allclose(make_state(StateSpec("mixed_w", a=0.3)).matrix, mixed_w(0.3).matrix)
    amps = np.zeros(4)
    amps[0] = 1.0
    assert make_state(StateSpec("pure_vector", amplitudes=amps)).num_qubits == 2
    raw = make_state(StateSpec("raw_matrix", entries=np.eye(2) / 2))
    assert raw.num_qubits == 1


def test_pure_families_are_rank_one():
    for rho in (ghz(), w()):
        eigs = np.linalg.eigvalsh(rho.matrix)
        assert abs(eigs[-1] - 1.0) <= 1e-9


def test_invalid_params():
    with pytest.raises(InvalidParam):
        mixed_ghz(-0.1)
    with pytest.raises(InvalidParam):
        mixed_w(1.2)
    with pytest.raises(InvalidParam):
        biseparable(0.6)
    with pytest.raises(InvalidParam):
        pure_state([1.0, 1.0])
    with pytest.raises(InvalidParam):
        make_state(StateSpec("mixed_ghz"))
    with pytest.raises(InvalidParam):
        make_state(StateSpec("nope"))


def test_not_a_state():
    with pytest.raises(NotAState, match="trace"):
        DensityMatrix(np.eye(4))
    with pytest.raises(NotAState, match="hermiticity"):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(NotAState, match="eigenvalue"):
        DensityMatrix(np.diag([1.5, -0.5]))
    with pytest.raises(NotAState, match="dimension"):
        DensityMatrix(np.eye(3) / 3)


def test_partial_trace_ghz_single():
    assert_allclose(partial_trace(ghz(), [0]).matrix, np.eye(2) / 2, atol=1e-12)


def test_partial_trace_w_single():
    assert_allclose(partial_trace(w(), [0]).matrix, np.diag([2 / 3, 1 / 3]), atol=1e-12)


def test_partial_trace_mixed_w_pair():
    for a in (0.0, 0.3, 0.7, 1.0):
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 0] = expected[1, 1] = expected[2, 2] = (3 + a) / 12
        expected[3, 3] = (1 - a) / 4
        expected[1, 2] = expected[2, 1] = a / 3
        assert_allclose(partial_trace(mixed_w(a), [0, 1]).matrix, expected, atol=1e-12)


def test_partial_trace_mixed_ghz_single_any_weight():
    for a in (0.0, 0.25, 0.5, 0.75, 1.0):
        for q in range(3):
            got = partial_trace(mixed_ghz(a), [q]).matrix
            assert np.max(np.abs(got - np.eye(2) / 2)) <= 1e-12


def test_partial_trace_composition():
    rng = np.random.default_rng(11)
    rho = random_mixed_state(rng)
    one_step = partial_trace(rho, [0]).matrix
    two_step = partial_trace(partial_trace(rho, [0, 1]), [0]).matrix
    assert np.max(np.abs(one_step - two_step)) <= 1e-12


def test_partial_trace_keep_order():
    rng = np.random.default_rng(12)
    rho = random_mixed_state(rng)
    fwd = partial_trace(rho, [0, 2]).matrix
    rev = partial_trace(rho, [2, 0]).matrix
    # Reversing the kept list swaps the two qubits of the reduced state.
    swapped = fwd.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    assert_allclose(rev, swapped, atol=1e-15)


def test_partial_trace_bad_subsets():
    rho = ghz()
    for keep in ([], [0, 0], [3], [0, 1, 2]):
        with pytest.raises(BadSubset):
            partial_trace(rho, keep)


def test_project_ghz_computational():
    proj = embed_operator(np.diag([1.0, 0.0]), [0], 3)
    prob, post = project(ghz(), proj)
    assert prob == pytest.approx(0.5, abs=1e-12)
    expected = np.zeros((8, 8))
    expected[0, 0] = 1.0
    assert_allclose(post.matrix, expected, atol=1e-12)


def test_project_identity():
    rng = np.random.default_rng(13)
    rho = random_mixed_state(rng)
    prob, post = project(rho, np.eye(8))
    assert prob == pytest.approx(1.0, abs=1e-12)
    assert_allclose(post.matrix, rho.matrix, atol=1e-12)


def test_project_hadamard_direction_leaves_bell_pair():
    t = np.pi / 4
    u1 = np.array([np.cos(t), np.sin(t)], dtype=complex)
    proj = embed_operator(np.outer(u1, u1.conj()), [2], 3)
    prob, post = project(ghz(), proj)
    assert prob == pytest.approx(0.5, abs=1e-12)
    assert_allclose(partial_trace(post, [0, 1]).matrix, bell_phi_plus(), atol=1e-12)


def test_project_complete_family():
    rng = np.random.default_rng(14)
    rho = random_mixed_state(rng)
    t = 0.37
    u1 = np.array([np.cos(t), np.sin(t)], dtype=complex)
    u2 = np.array([np.sin(t), -np.cos(t)], dtype=complex)
    total_prob = 0.0
    accum = np.zeros((8, 8), dtype=complex)
    for u in (u1, u2):
        proj = embed_operator(np.outer(u, u.conj()), [1], 3)
        prob, post = project(rho, proj)
        total_prob += prob
        accum += prob * post.matrix
    assert total_prob == pytest.approx(1.0, abs=1e-9)
    assert abs(np.trace(accum).real - 1.0) <= 1e-9


def test_project_rejects_non_projectors():
    rho = ghz()
    with pytest.raises(NotProjector):
        project(rho, np.eye(8) * 0.5)
    bad = np.zeros((8, 8), dtype=complex)
    bad[0, 1] = 1.0
    with pytest.raises(NotProjector):
        project(rho, bad)
    with pytest.raises(NotProjector):
        project(rho, np.eye(4))


def test_embed_operator_patterns():
    got = embed_operator(PAULI_Z, [1], 3)
    assert_allclose(got, np.diag([1, 1, -1, -1, 1, 1, -1, -1]), atol=1e-15)
    assert_allclose(embed_operator(np.eye(2), [1], 3), np.eye(8), atol=1e-15)
    got = embed_operator(np.diag([1.0, 0.0]), [0], 3)
    assert_allclose(got, np.diag([1, 1, 1, 1, 0, 0, 0, 0]), atol=1e-15)


def test_embed_operator_respects_target_order():
    rng = np.random.default_rng(15)
    op = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    direct = np.kron(op, np.eye(2))  # acts on qubits (0, 1) of three
    assert_allclose(embed_operator(op, [0, 1], 3), direct, atol=1e-15)
    # Swapping the target list permutes the operator's two slots.
    swapped = op.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    assert_allclose(embed_operator(op, [1, 0], 3), np.kron(swapped, np.eye(2)), atol=1e-15)


def test_embed_operator_bad_targets():
    with pytest.raises(BadSubset):
        embed_operator(np.eye(2), [], 3)
    with pytest.raises(BadSubset):
        embed_operator(np.eye(2), [3], 3)
    with pytest.raises(BadSubset):
        embed_operator(np.eye(4), [1, 1], 3)
    with pytest.raises(BadSubset):
        embed_operator(np.eye(4), [0], 3)


def test_density_matrix_is_frozen():
    rho = ghz()
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0
