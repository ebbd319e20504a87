"""Circuit IR over named qubit lines, with CNOT-count and CNOT-layer depth.

Qubit indices are 1-based; qubit 1 is the most significant bit of basis-state
labels.  Circuits are immutable after construction.
"""

import dataclasses
import json
from dataclasses import dataclass

import numpy as np

from .errors import BadDimensionError, DimensionMismatchError
from .linalg import require_unitary

PHASE_LABELS = ("P1", "P2", "P3", "P4")


def _check_phase(label: str | None) -> None:
    if label is not None and label not in PHASE_LABELS:
        raise BadDimensionError(f"phase label must be one of {PHASE_LABELS} or None")


@dataclass(frozen=True, eq=False)
class OneQubitGate:
    target: int
    matrix: np.ndarray
    phase: str | None = None

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise BadDimensionError(f"one-qubit gate matrix must be 2x2, got {m.shape}")
        require_unitary(m, what="one-qubit gate matrix")
        object.__setattr__(self, "matrix", m)
        _check_phase(self.phase)


@dataclass(frozen=True, eq=False)
class Cnot:
    control: int
    target: int
    phase: str | None = None

    def __post_init__(self):
        if self.control == self.target:
            raise BadDimensionError("CNOT control and target must differ")
        _check_phase(self.phase)


Gate = OneQubitGate | Cnot


def _gate_qubits(gate: Gate) -> tuple[int, ...]:
    if isinstance(gate, Cnot):
        return (gate.control, gate.target)
    return (gate.target,)


@dataclass(frozen=True, eq=False)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise BadDimensionError("circuit needs at least one qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in _gate_qubits(g):
                if not 1 <= q <= self.n_qubits:
                    raise BadDimensionError(
                        f"gate qubit {q} outside register 1..{self.n_qubits}"
                    )

    def __len__(self) -> int:
        return len(self.gates)


def cnot_count(c: Circuit) -> int:
    """Number of CNOT gates in the circuit."""
    return sum(1 for g in c.gates if isinstance(g, Cnot))


def depth(c: Circuit) -> int:
    """CNOT-layer depth under greedy as-soon-as-possible scheduling.

    Gates on disjoint qubit sets share a layer; one-qubit gates cost nothing
    and are absorbed into adjacent layers, so only layers holding at least one
    CNOT are counted.
    """
    level = [0] * (c.n_qubits + 1)
    d = 0
    for g in c.gates:
        if isinstance(g, Cnot):
            layer = max(level[g.control], level[g.target]) + 1
            level[g.control] = layer
            level[g.target] = layer
            d = max(d, layer)
    return d


def concat(*circuits: Circuit) -> Circuit:
    """Gate-order-preserving concatenation of circuits on the same register."""
    if not circuits:
        raise BadDimensionError("need at least one circuit")
    n = circuits[0].n_qubits
    for c in circuits[1:]:
        if c.n_qubits != n:
            raise DimensionMismatchError("cannot concatenate circuits of different widths")
    gates: list[Gate] = []
    for c in circuits:
        gates.extend(c.gates)
    return Circuit(n_qubits=n, gates=tuple(gates))


def inverse(c: Circuit) -> Circuit:
    """Reverse the gate order and invert every gate (CNOT is self-inverse)."""
    gates: list[Gate] = []
    for g in reversed(c.gates):
        if isinstance(g, Cnot):
            gates.append(g)
        else:
            gates.append(OneQubitGate(g.target, g.matrix.conj().T, phase=g.phase))
    return Circuit(n_qubits=c.n_qubits, gates=tuple(gates))


def shift(c: Circuit, offset: int, n_qubits: int) -> Circuit:
    """Re-embed a circuit with all qubit indices moved up by ``offset``."""
    gates: list[Gate] = []
    for g in c.gates:
        if isinstance(g, Cnot):
            gates.append(Cnot(g.control + offset, g.target + offset, phase=g.phase))
        else:
            gates.append(OneQubitGate(g.target + offset, g.matrix, phase=g.phase))
    return Circuit(n_qubits=n_qubits, gates=tuple(gates))


def with_phase(c: Circuit, label: str | None) -> Circuit:
    """Annotate every gate of the circuit with one phase label."""
    gates = tuple(dataclasses.replace(g, phase=label) for g in c.gates)
    return Circuit(n_qubits=c.n_qubits, gates=gates)


@dataclass(frozen=True)
class CostReport:
    cnot_count: int
    depth: int
    per_phase: dict[str, int]
    cnot_lower: int | None = None
    cnot_upper_scheme: int | None = None

    def to_dict(self) -> dict:
        out = {
            "cnot_count": self.cnot_count,
            "depth": self.depth,
            "per_phase": dict(self.per_phase),
        }
        if self.cnot_lower is not None:
            out["cnot_lower"] = self.cnot_lower
        if self.cnot_upper_scheme is not None:
            out["cnot_upper_scheme"] = self.cnot_upper_scheme
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def cost_report(
    c: Circuit,
    cnot_lower: int | None = None,
    cnot_upper_scheme: int | None = None,
) -> CostReport:
    """CNOT count, CNOT-layer depth, and per-phase CNOT breakdown."""
    per_phase: dict[str, int] = {}
    for g in c.gates:
        if isinstance(g, Cnot):
            key = g.phase if g.phase is not None else "unlabeled"
            per_phase[key] = per_phase.get(key, 0) + 1
    return CostReport(
        cnot_count=cnot_count(c),
        depth=depth(c),
        per_phase=per_phase,
        cnot_lower=cnot_lower,
        cnot_upper_scheme=cnot_upper_scheme,
    )
