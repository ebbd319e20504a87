"""Acceptance suite: one test per criterion, full sample sizes, pinned
tolerances.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the
per-criterion PASS lines."""

import time

import numpy as np

from statesynth import (
    Circuit,
    Cnot,
    baseline_prepare,
    circuit_unitary,
    cnot_count,
    cnot_lower_bound,
    concat,
    cosine_sine,
    depth,
    depth_lower_bound,
    fidelity,
    haar_state,
    haar_unitary,
    phase_aligned_distance,
    run,
    scheme_upper_bound,
    schmidt_prepare,
    svd,
    synth_2q_state,
    synth_kq_unitary,
    transform,
    unitary_eig,
    zero_state,
)

FID = 1 - 1e-9


def test_criterion_1_four_qubit_bound():
    """500 random 4-qubit states: <=9 CNOTs, depth <=5, <50 ms per state."""
    rng = np.random.default_rng(1001)
    elapsed = 0.0
    for _ in range(500):
        s = haar_state(4, rng)
        t0 = time.perf_counter()
        plan = schmidt_prepare(s)
        elapsed += time.perf_counter() - t0
        assert cnot_count(plan.total) <= 9
        assert depth(plan.total) <= 5
        assert fidelity(run(plan.total, zero_state(4)), s) >= FID
    per_state = elapsed / 500
    assert per_state < 0.050, f"synthesis took {per_state * 1e3:.1f} ms per state"
    print(f"\nACCEPTANCE 1: 4-qubit <=9 CNOTs, depth <=5, {per_state * 1e3:.2f} ms/state  PASS")


def test_criterion_2_five_qubit_bound():
    """200 random 5-qubit states: <=26 CNOTs, depth <=22."""
    rng = np.random.default_rng(1002)
    for _ in range(200):
        s = haar_state(5, rng)
        plan = schmidt_prepare(s)
        assert cnot_count(plan.total) <= 26
        assert depth(plan.total) <= 22
        assert fidelity(run(plan.total, zero_state(5)), s) >= FID
    print("\nACCEPTANCE 2: 5-qubit <=26 CNOTs, depth <=22  PASS")


def test_criterion_3_six_qubit_bound():
    """100 random 6-qubit states: <=47 CNOTs, depth <=25."""
    rng = np.random.default_rng(1003)
    for _ in range(100):
        s = haar_state(6, rng)
        plan = schmidt_prepare(s)
        assert cnot_count(plan.total) <= 47
        assert depth(plan.total) <= 25
        assert fidelity(run(plan.total, zero_state(6)), s) >= FID
    print("\nACCEPTANCE 3: 6-qubit <=47 CNOTs, depth <=25  PASS")


def test_criterion_4_unitary_synthesizer_counts():
    """200 random unitaries per size: 4x4 <=3, 8x8 <=20, 16x16 <=100 CNOTs."""
    rng = np.random.default_rng(1004)
    for dim, ceiling in ((4, 3), (8, 20), (16, 100)):
        for _ in range(200):
            u = haar_unitary(dim, rng)
            c = synth_kq_unitary(u)
            assert cnot_count(c) <= ceiling
            assert phase_aligned_distance(circuit_unitary(c), u) <= 1e-8
    print("\nACCEPTANCE 4: unitary CNOT ceilings 3/20/100 with operator equality  PASS")


def test_criterion_5_two_qubit_state_prep():
    """1000 random 2-qubit states: at most 1 CNOT each."""
    rng = np.random.default_rng(1005)
    for _ in range(1000):
        s = haar_state(2, rng)
        c = synth_2q_state(s)
        assert cnot_count(c) <= 1
        assert fidelity(run(c, zero_state(2)), s) >= FID
    print("\nACCEPTANCE 5: 2-qubit prep with <=1 CNOT  PASS")


def test_criterion_6_baseline_prep():
    """200 random states at n in {2,3,4,5}: <= 2^n - n - 1 CNOTs."""
    rng = np.random.default_rng(1006)
    for n, ceiling in ((2, 1), (3, 4), (4, 11), (5, 26)):
        for _ in range(200):
            s = haar_state(n, rng)
            c = baseline_prepare(s)
            assert cnot_count(c) <= ceiling
            assert fidelity(run(c, zero_state(n)), s) >= FID
    print("\nACCEPTANCE 6: baseline prep within 1/4/11/26 CNOTs  PASS")


def test_criterion_7_lower_bounds():
    """Exact parameter-counting bounds."""
    assert cnot_lower_bound(4) == 6
    assert cnot_lower_bound(5) == 13
    assert cnot_lower_bound(6) == 29
    assert depth_lower_bound(4) == 3
    assert depth_lower_bound(5) == 7
    print("\nACCEPTANCE 7: lower bounds 6/13/29 and depths 3/7  PASS")


def test_criterion_8_asymptotic_prefactors():
    """scheme bound under 23/24*2^n (even) and 115/96*2^n (odd)."""
    for n in range(4, 21, 2):
        assert scheme_upper_bound(n) < (23 / 24) * 2**n
    for n in range(5, 20, 2):
        assert scheme_upper_bound(n) < (115 / 96) * 2**n
    print("\nACCEPTANCE 8: asymptotic prefactors 23/24 and 115/96  PASS")


def test_criterion_9_transform():
    """100 random 4-qubit pairs: psi -> phi with <=18 CNOTs."""
    rng = np.random.default_rng(1009)
    for _ in range(100):
        psi, phi = haar_state(4, rng), haar_state(4, rng)
        c = transform(psi, phi)
        assert cnot_count(c) <= 18
        assert fidelity(run(c, psi), phi) >= FID
    print("\nACCEPTANCE 9: transform within 18 CNOTs  PASS")


def test_criterion_10_property_suites():
    """Factorization, simulator, copy-fan and commutation properties in <60 s."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(1010)

    # factorization reconstruction at 1e-10, 1000 random unitaries per dim
    for dim in (2, 4, 8, 16):
        for _ in range(1000):
            u = haar_unitary(dim, rng)
            assert np.max(np.abs(svd(u).reconstruct() - u)) <= 1e-10
            w, v = unitary_eig(u)
            assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - u)) <= 1e-9
            csd = cosine_sine(u)
            assert np.max(np.abs(csd.reconstruct() - u)) <= 1e-10

    # simulator composition and norm preservation at 1e-9
    from statesynth import OneQubitGate

    for _ in range(1000):
        n = int(rng.integers(2, 6))
        gates = []
        for _ in range(8):
            if rng.random() < 0.5:
                gates.append(OneQubitGate(int(rng.integers(1, n + 1)), haar_unitary(2, rng)))
            else:
                a, b = rng.permutation(np.arange(1, n + 1))[:2]
                gates.append(Cnot(int(a), int(b)))
        half = len(gates) // 2
        c1, c2 = Circuit(n, tuple(gates[:half])), Circuit(n, tuple(gates[half:]))
        s = haar_state(n, rng)
        out = run(concat(c1, c2), s)
        assert abs(np.linalg.norm(out) - 1.0) <= 1e-9
        assert np.max(np.abs(out - run(c2, run(c1, s)))) <= 1e-9

    # phase-2 copy identity, exact to 1e-12
    for k in (1, 2, 3):
        alphas = rng.normal(size=1 << k) + 1j * rng.normal(size=1 << k)
        alphas /= np.linalg.norm(alphas)
        state = np.zeros(1 << (2 * k), dtype=complex)
        state[np.arange(1 << k) << k] = alphas
        fan = Circuit(2 * k, tuple(Cnot(j, j + k) for j in range(1, k + 1)))
        out = run(fan, state)
        expected = np.zeros_like(state)
        expected[(np.arange(1 << k) << k) | np.arange(1 << k)] = alphas
        assert np.max(np.abs(out - expected)) <= 1e-12

    # phases 3 and 4 commute, to 1e-12
    for n in (4, 5, 6):
        s = haar_state(n, rng)
        plan = schmidt_prepare(s)
        mid = run(plan.phase2, run(plan.phase1, zero_state(n)))
        a = run(plan.phase4, run(plan.phase3, mid))
        b = run(plan.phase3, run(plan.phase4, mid))
        assert np.max(np.abs(a - b)) <= 1e-12

    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"property suites took {elapsed:.1f} s"
    print(f"\nACCEPTANCE 10: property suites in {elapsed:.1f} s (<60 s)  PASS")
