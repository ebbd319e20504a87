"""Simulator semantics: gate action, composition, norm, fidelity, file format."""

import json

import numpy as np
import pytest

from statesynth import (
    Circuit,
    Cnot,
    DimensionMismatchError,
    NotNormalizedError,
    OneQubitGate,
    circuit_unitary,
    concat,
    fidelity,
    haar_state,
    haar_unitary,
    run,
    state_from_json,
    state_to_json,
    zero_state,
)

H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
CNOT_MAT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def test_empty_circuit_is_identity():
    s = zero_state(4)
    assert np.allclose(run(Circuit(4, ()), s), s)


def test_bell_construction():
    c = Circuit(2, (OneQubitGate(1, H), Cnot(1, 2)))
    out = run(c, zero_state(2))
    assert np.allclose(out, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_phase2_fan_copies_basis():
    """CNOT fan applied to (sum_i a_i |i>)|00> yields sum_i a_i |i>|i>."""
    rng = np.random.default_rng(0)
    alphas = rng.normal(size=4) + 1j * rng.normal(size=4)
    alphas /= np.linalg.norm(alphas)
    state = np.zeros(16, dtype=complex)
    for i in range(4):
        state[i << 2] = alphas[i]  # qubits 1,2 hold i; qubits 3,4 hold 0
    fan = Circuit(4, (Cnot(1, 3), Cnot(2, 4)))
    out = run(fan, state)
    expected = np.zeros(16, dtype=complex)
    for i in range(4):
        expected[(i << 2) | i] = alphas[i]
    assert np.max(np.abs(out - expected)) < 1e-12


def test_gate_action_matches_dense_matrices():
    """Strided updates agree with explicit kron matrices on all basis states."""
    rng = np.random.default_rng(1)
    u = haar_unitary(2, rng)
    for target, left, right in ((1, 1, 4), (2, 2, 2), (3, 4, 1)):
        c = Circuit(3, (OneQubitGate(target, u),))
        dense = np.kron(np.kron(np.eye(left), u), np.eye(right))
        assert np.max(np.abs(circuit_unitary(c) - dense)) < 1e-12
    c = Circuit(2, (Cnot(1, 2),))
    assert np.max(np.abs(circuit_unitary(c) - CNOT_MAT)) < 1e-12
    c21 = Circuit(2, (Cnot(2, 1),))
    swapped = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])
    assert np.max(np.abs(circuit_unitary(c21) - swapped)) < 1e-12


def _random_circuit(n, n_gates, rng):
    gates = []
    for _ in range(n_gates):
        if rng.random() < 0.5:
            gates.append(OneQubitGate(int(rng.integers(1, n + 1)), haar_unitary(2, rng)))
        else:
            a, b = rng.permutation(np.arange(1, n + 1))[:2]
            gates.append(Cnot(int(a), int(b)))
    return Circuit(n, tuple(gates))


def test_run_preserves_norm():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(2, 6))
        c = _random_circuit(n, 10, rng)
        out = run(c, haar_state(n, rng))
        assert abs(np.linalg.norm(out) - 1.0) < 1e-9


def test_run_composes():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n = 4
        c1 = _random_circuit(n, 6, rng)
        c2 = _random_circuit(n, 6, rng)
        s = haar_state(n, rng)
        a = run(concat(c1, c2), s)
        b = run(c2, run(c1, s))
        assert np.max(np.abs(a - b)) < 1e-10


def test_run_rejects_wrong_width():
    with pytest.raises(DimensionMismatchError):
        run(Circuit(2, ()), zero_state(3))


def test_fidelity_basics():
    rng = np.random.default_rng(4)
    psi = haar_state(3, rng)
    assert abs(fidelity(psi, psi) - 1.0) < 1e-12
    assert abs(fidelity(psi, np.exp(1.23j) * psi) - 1.0) < 1e-12
    zero = np.array([1, 0], dtype=complex)
    one = np.array([0, 1], dtype=complex)
    assert fidelity(zero, one) == 0.0
    with pytest.raises(DimensionMismatchError):
        fidelity(zero, zero_state(2))


def test_state_json_roundtrip():
    rng = np.random.default_rng(5)
    s = haar_state(3, rng)
    back = state_from_json(state_to_json(s))
    assert np.max(np.abs(back - s)) < 1e-12


def test_state_json_rejects_unnormalized():
    payload = {"n": 1, "amplitudes": [[2.0, 0.0], [0.0, 0.0]]}
    with pytest.raises(NotNormalizedError):
        state_from_json(json.dumps(payload))
    fixed = state_from_json(json.dumps(payload), normalize=True)
    assert np.allclose(fixed, [1.0, 0.0])
