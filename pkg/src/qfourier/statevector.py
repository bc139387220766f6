"""Dense statevector simulation.

Qubit 0 is the least significant bit of the basis index.  The amplitude
vector is viewed as an n-dimensional (2, 2, ..., 2) tensor, where qubit q
lives on axis n - 1 - q, so controls become plain integer indices and a
single-qubit gate touches two strided views.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, StructureError, ValidationError
from .gates import Gate

MAX_QUBITS = 24

_H = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
_X = np.array([[0.0, 1.0], [1.0, 0.0]])


def ry_matrix(angle):
    c, s = math.cos(angle / 2.0), math.sin(angle / 2.0)
    return np.array([[c, -s], [s, c]])


def gate_matrix(gate: Gate):
    """2x2 matrix of a single-target gate (controls excluded)."""
    if gate.kind == "ry":
        return ry_matrix(gate.angle)
    if gate.kind == "h":
        return _H
    if gate.kind == "x":
        return _X
    raise StructureError(f"{gate.kind} has no 2x2 matrix")


@dataclass(frozen=True)
class State:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << self.num_qubits,):
            raise ValidationError(
                f"expected {1 << self.num_qubits} amplitudes, got {amps.shape}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def _check_size(num_qubits):
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise CapacityError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")


def new_state(num_qubits: int) -> State:
    """|0...0> on ``num_qubits`` qubits."""
    _check_size(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[0] = 1.0
    return State(num_qubits, amps)


def from_amplitudes(amplitudes, normalize=False) -> State:
    amps = np.asarray(amplitudes, dtype=complex).ravel()
    n = int(round(math.log2(amps.size))) if amps.size else 0
    if amps.size != 1 << n:
        raise ValidationError("amplitude count must be a power of two")
    _check_size(n)
    if normalize:
        amps = amps / np.linalg.norm(amps)
    return State(n, amps)


def _check_qubits(n, qubits):
    for q in qubits:
        if not 0 <= q < n:
            raise ValidationError(f"qubit {q} out of range for {n} qubits")


def apply_inplace(psi: np.ndarray, num_qubits: int, gate: Gate) -> None:
    """Apply ``gate`` to the (2,)*n tensor ``psi`` in place."""
    n = num_qubits
    base = [slice(None)] * n
    for q, pol in gate.controls:
        base[n - 1 - q] = pol
    if gate.kind == "swap":
        a, b = gate.targets
        i01 = list(base)
        i10 = list(base)
        i01[n - 1 - a], i01[n - 1 - b] = 0, 1
        i10[n - 1 - a], i10[n - 1 - b] = 1, 0
        i01, i10 = tuple(i01), tuple(i10)
        tmp = psi[i01].copy()
        psi[i01] = psi[i10]
        psi[i10] = tmp
        return
    t = gate.targets[0]
    i0 = list(base)
    i1 = list(base)
    i0[n - 1 - t] = 0
    i1[n - 1 - t] = 1
    i0, i1 = tuple(i0), tuple(i1)
    m = gate_matrix(gate)
    a0 = psi[i0].copy()
    a1 = psi[i1]
    new1 = m[1, 0] * a0 + m[1, 1] * a1
    psi[i0] = m[0, 0] * a0 + m[0, 1] * a1
    psi[i1] = new1


def apply_gate(state: State, gate: Gate) -> State:
    """Return a new state with ``gate`` applied."""
    _check_qubits(state.num_qubits, gate.qubits)
    psi = state.amplitudes.copy().reshape((2,) * state.num_qubits)
    apply_inplace(psi, state.num_qubits, gate)
    return State(state.num_qubits, psi.reshape(-1))


def prepare_psi_x(state: State, qubit: int, x: float) -> State:
    """Load cos x|0> + sin x|1> onto ``qubit`` (assumed to be in |0>)."""
    _check_qubits(state.num_qubits, [qubit])
    return apply_gate(state, Gate("ry", (qubit,), (), 2.0 * x))


def marginal(state: State, qubit: int) -> np.ndarray:
    """(P(0), P(1)) for one qubit."""
    _check_qubits(state.num_qubits, [qubit])
    n = state.num_qubits
    probs = state.probabilities().reshape((2,) * n)
    axes = tuple(i for i in range(n) if i != n - 1 - qubit)
    return probs.sum(axis=axes) if axes else probs


def prob_of_outcome(state: State, qubit: int, outcome: int) -> float:
    if outcome not in (0, 1):
        raise ValidationError("outcome must be 0 or 1")
    p = float(marginal(state, qubit)[outcome])
    return min(max(p, 0.0), 1.0)
