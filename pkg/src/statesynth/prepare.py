"""Four-phase Schmidt-decomposition state preparation.

Pipeline: load the Schmidt coefficients on the first half of the register,
copy the basis with a CNOT fan, then rotate each half into its Schmidt basis
with one k-qubit unitary per half.  The fan uses control j -> target j+k1;
for odd n the appended right-half qubit stays |0>, so the right basis change
reads its input from the strided columns.
"""

from dataclasses import dataclass

import numpy as np

from . import bounds as bounds_mod
from .circuit import (
    Circuit,
    Cnot,
    OneQubitGate,
    concat,
    cost_report,
    CostReport,
    inverse,
    shift,
    with_phase,
)
from .errors import BadLengthError, DimensionMismatchError, TooFewQubitsError
from .linalg import svd
from .simulate import num_qubits, require_normalized
from .synthesis import synth_kq_unitary, uc_su2_up_to_diagonal


@dataclass(frozen=True)
class SchmidtForm:
    """Generalized Schmidt data across the k1 | k2 cut (k1 <= k2).

    ``alphas`` are the complex coefficients with alphas[0] real non-negative;
    columns i < 2^k1 of ``basis_left``/``basis_right`` hold the paired
    Schmidt vectors, the remaining right columns an orthonormal completion.
    """

    k1: int
    k2: int
    alphas: np.ndarray
    basis_left: np.ndarray
    basis_right: np.ndarray

    def reassemble(self) -> np.ndarray:
        r = 1 << self.k1
        left = self.basis_left[:, :r]
        right = self.basis_right[:, :r]
        return (left @ np.diag(self.alphas) @ right.T).reshape(-1)


def schmidt_decompose(s: np.ndarray) -> SchmidtForm:
    """Schmidt decomposition across the floor(n/2) | ceil(n/2) cut."""
    s = require_normalized(np.asarray(s, dtype=complex))
    n = num_qubits(s)
    if n < 2:
        raise TooFewQubitsError("schmidt decomposition needs at least 2 qubits")
    k1 = n // 2
    k2 = n - k1
    res = svd(s.reshape(1 << k1, 1 << k2))
    return SchmidtForm(
        k1=k1,
        k2=k2,
        alphas=res.singular_values.astype(complex),
        basis_left=res.u,
        basis_right=res.v_dagger.T,
    )


def _map_zero_to(a: complex, b: complex) -> np.ndarray:
    """Unitary sending |0> to (a, b); the pair must have norm one."""
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]])


def baseline_prepare(s: np.ndarray) -> Circuit:
    """Prepare a state by inverting a multiplexed-gate disentangling cascade.

    Working from the last qubit up, each step maps the target qubit to |0>
    with one uniformly controlled gate implemented up to a diagonal; the
    diagonal phases migrate into the amplitudes handled by the next step.
    Costs at most 2^n - n - 1 CNOTs.
    """
    s = require_normalized(np.asarray(s, dtype=complex))
    n = num_qubits(s)
    state = s.copy()
    gates: list = []
    for m in range(n, 1, -1):
        pairs = state.reshape(-1, 2)
        mats = []
        for a0, a1 in pairs:
            r = np.sqrt(abs(a0) ** 2 + abs(a1) ** 2)
            if r < 1e-15:
                mats.append(np.eye(2, dtype=complex))
            else:
                mats.append(np.array([[np.conj(a0), np.conj(a1)], [-a1, a0]]) / r)
        uc_gates, delta = uc_su2_up_to_diagonal(mats, list(range(1, m)), m)
        gates.extend(uc_gates)
        state = np.array(
            [
                np.conj(delta[2 * j]) * (mats[j][0, 0] * p[0] + mats[j][0, 1] * p[1])
                for j, p in enumerate(pairs)
            ]
        )
    a, b = state
    gates.append(OneQubitGate(1, np.array([[np.conj(a), np.conj(b)], [-b, a]])))
    return inverse(Circuit(n, tuple(gates)))


def _phase4_unitary(basis_right: np.ndarray, k1: int, k2: int) -> np.ndarray:
    """Right-half basis change reading its input from the strided columns.

    After the CNOT fan the right register holds i * 2^(k2-k1), so column
    i * 2^(k2-k1) must map to the i-th right Schmidt vector; the completion
    columns fill the never-populated slots.
    """
    if k1 == k2:
        return basis_right
    dim = 1 << k2
    r = 1 << k1
    stride = 1 << (k2 - k1)
    main = [i * stride for i in range(r)]
    rest = [c for c in range(dim) if c % stride != 0]
    u = np.empty((dim, dim), dtype=complex)
    u[:, main] = basis_right[:, :r]
    u[:, rest] = basis_right[:, r:]
    return u


def _phase1_circuit(alphas: np.ndarray, k1: int, mode: str) -> Circuit:
    """Coefficient loader on the left half: baseline or recursive pipeline."""
    if k1 == 1:
        return Circuit(1, (OneQubitGate(1, _map_zero_to(alphas[0], alphas[1])),))
    if mode == "auto":
        recursive = bounds_mod.scheme_upper_bound(k1) < bounds_mod.baseline_upper_bound(k1)
    elif mode in ("baseline", "recursive"):
        recursive = mode == "recursive"
    else:
        raise BadLengthError(f"unknown phase1 mode {mode!r}")
    if recursive:
        return schmidt_prepare(alphas, phase1=mode).total
    return baseline_prepare(alphas)


@dataclass(frozen=True)
class PrepPlan:
    """Phase circuits (all n qubits wide), their concatenation, and metrics."""

    phase1: Circuit
    phase2: Circuit
    phase3: Circuit
    phase4: Circuit
    total: Circuit
    report: CostReport
    schmidt: SchmidtForm


def schmidt_prepare(s: np.ndarray, phase1: str = "auto", rank_aware: bool = False) -> PrepPlan:
    """Synthesize a circuit preparing the given state from |0...0>.

    ``phase1`` selects how the coefficient register is loaded ("auto" picks
    the cheaper of the baseline cascade and the recursive pipeline, ties to
    baseline).  ``rank_aware`` shortcuts product states across the cut by
    preparing the two halves independently; it is off by default and excluded
    from the cost guarantees.
    """
    s = require_normalized(np.asarray(s, dtype=complex))
    n = num_qubits(s)
    if n < 2:
        raise TooFewQubitsError("schmidt_prepare needs at least 2 qubits")
    sf = schmidt_decompose(s)
    k1, k2 = sf.k1, sf.k2

    if rank_aware and len(sf.alphas) > 1 and abs(sf.alphas[1]) < 1e-12:
        return _prepare_product(s, sf, n)

    p1 = with_phase(shift(_phase1_circuit(sf.alphas, k1, phase1), 0, n), "P1")
    p2 = Circuit(n, tuple(Cnot(j, j + k1, phase="P2") for j in range(1, k1 + 1)))
    p3 = with_phase(shift(synth_kq_unitary(sf.basis_left), 0, n), "P3")
    p4_mat = _phase4_unitary(sf.basis_right, k1, k2)
    p4 = with_phase(shift(synth_kq_unitary(p4_mat), k1, n), "P4")
    total = concat(p1, p2, p3, p4)
    report = cost_report(
        total,
        cnot_lower=bounds_mod.cnot_lower_bound(n),
        cnot_upper_scheme=bounds_mod.scheme_upper_bound(n),
    )
    return PrepPlan(
        phase1=p1, phase2=p2, phase3=p3, phase4=p4, total=total, report=report, schmidt=sf
    )


def _prepare_state_any(s: np.ndarray, label: str, rank_aware: bool) -> Circuit:
    n = num_qubits(s)
    if n == 1:
        return Circuit(1, (OneQubitGate(1, _map_zero_to(s[0], s[1]), phase=label),))
    return with_phase(schmidt_prepare(s, rank_aware=rank_aware).total, label)


def _prepare_product(s: np.ndarray, sf: SchmidtForm, n: int) -> PrepPlan:
    """Rank-1 shortcut: prepare the two halves independently, no CNOT fan."""
    left = sf.basis_left[:, 0] * sf.alphas[0]
    right = sf.basis_right[:, 0]
    p1 = Circuit(n, ())
    p2 = Circuit(n, ())
    p3 = shift(_prepare_state_any(left, "P3", True), 0, n)
    p4 = shift(_prepare_state_any(right, "P4", True), sf.k1, n)
    total = concat(p1, p2, p3, p4)
    report = cost_report(
        total,
        cnot_lower=bounds_mod.cnot_lower_bound(n),
        cnot_upper_scheme=bounds_mod.scheme_upper_bound(n),
    )
    return PrepPlan(
        phase1=p1, phase2=p2, phase3=p3, phase4=p4, total=total, report=report, schmidt=sf
    )


def transform(psi: np.ndarray, phi: np.ndarray, phase1: str = "auto") -> Circuit:
    """Circuit mapping psi to phi: un-prepare psi, then prepare phi.

    Costs at most twice the preparation ceiling for the register size.
    """
    psi = require_normalized(np.asarray(psi, dtype=complex))
    phi = require_normalized(np.asarray(phi, dtype=complex))
    if len(psi) != len(phi):
        raise DimensionMismatchError(
            f"states act on different registers: {len(psi)} vs {len(phi)}"
        )
    unprepare = inverse(schmidt_prepare(psi, phase1=phase1).total)
    prepare = schmidt_prepare(phi, phase1=phase1).total
    return concat(unprepare, prepare)
