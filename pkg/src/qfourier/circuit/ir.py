"""Circuit IR: register layout, gate list, execution and census."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..errors import CapacityError, StructureError, ValidationError
from ..gates import Gate
from ..statevector import State, apply_inplace, new_state, prepare_psi_x


@dataclass(frozen=True)
class RegisterLayout:
    """Named registers of the encoding circuit.

    ``qprime`` is the slot-selection register, listed from q'_1 (most
    significant bit of the slot label) downwards.  ``qdprime`` holds the
    two variant qubits and ``q`` the N data qubits, q_1 first, so
    ``q[-1]`` is the readout qubit q_N.
    """

    qprime: tuple = ()
    qdprime: tuple = ()
    q: tuple = ()
    extra: tuple = ()

    def __post_init__(self):
        for name in ("qprime", "qdprime", "q", "extra"):
            object.__setattr__(self, name, tuple(int(i) for i in getattr(self, name)))
        allq = self.all_qubits
        if len(set(allq)) != len(allq):
            raise StructureError("register indices must be distinct")
        if allq and min(allq) < 0:
            raise StructureError("negative register index")
        if self.qdprime and len(self.qdprime) != 2:
            raise StructureError("qdprime must hold exactly 2 qubits")

    @classmethod
    def standard(cls, M: int, N: int, extra: int = 0) -> "RegisterLayout":
        """q -> [0, N), q'' -> N, N+1, q' on the top M indices, then extras."""
        if N < 1 or M < 0:
            raise CapacityError(f"need N >= 1 and M >= 0, got N={N}, M={M}")
        q = tuple(range(N))
        qdp = (N, N + 1)
        qp = tuple(range(N + 2 + M - 1, N + 1, -1))
        ex = tuple(range(N + 2 + M, N + 2 + M + extra))
        return cls(qp, qdp, q, ex)

    @property
    def M(self) -> int:
        return len(self.qprime)

    @property
    def N(self) -> int:
        return len(self.q)

    @property
    def readout(self) -> int:
        return self.q[-1]

    @property
    def all_qubits(self) -> tuple:
        return self.qprime + self.qdprime + self.q + self.extra

    @property
    def num_qubits(self) -> int:
        allq = self.all_qubits
        return max(allq) + 1 if allq else 0

    def label_controls(self, label: int) -> tuple:
        """(qubit, polarity) pairs selecting slot ``label`` on q'."""
        M = self.M
        if not 0 <= label < (1 << M):
            raise CapacityError(f"slot label {label} does not fit {M} q' qubits")
        return tuple((q, (label >> (M - 1 - i)) & 1) for i, q in enumerate(self.qprime))

    def to_dict(self) -> dict:
        d = {"qprime": list(self.qprime), "qdprime": list(self.qdprime), "q": list(self.q)}
        if self.extra:
            d["extra"] = list(self.extra)
        return d

    @classmethod
    def from_dict(cls, d) -> "RegisterLayout":
        try:
            return cls(d.get("qprime", ()), d.get("qdprime", ()), d["q"], d.get("extra", ()))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError(f"bad layout record: {exc}") from exc


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple = ()
    layout: RegisterLayout | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if not isinstance(g, Gate):
                raise StructureError(f"not a Gate: {g!r}")
            if max(g.qubits) >= self.num_qubits:
                raise StructureError(f"{g!r} exceeds {self.num_qubits} qubits")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def replace_gates(self, gates) -> "Circuit":
        return Circuit(self.num_qubits, tuple(gates), self.layout)

    def compose(self, other: "Circuit") -> "Circuit":
        if other.num_qubits != self.num_qubits:
            raise StructureError("cannot compose circuits of different width")
        return self.replace_gates(self.gates + other.gates)

    def inverse(self) -> "Circuit":
        return self.replace_gates(g.inverse() for g in reversed(self.gates))


def run(circuit: Circuit, initial: State | None = None) -> State:
    """Apply the gates of ``circuit`` to ``initial`` (default |0...0>)."""
    if initial is None:
        initial = new_state(circuit.num_qubits)
    if initial.num_qubits != circuit.num_qubits:
        raise ValidationError(
            f"state has {initial.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    n = circuit.num_qubits
    psi = initial.amplitudes.copy().reshape((2,) * n)
    for g in circuit.gates:
        apply_inplace(psi, n, g)
    return State(n, psi.reshape(-1))


def input_state(layout: RegisterLayout, x: float, num_qubits: int | None = None) -> State:
    """|psi(x)> on every data qubit, |0> elsewhere."""
    st = new_state(num_qubits or layout.num_qubits)
    for q in layout.q:
        st = prepare_psi_x(st, q, x)
    return st


def unitary(circuit: Circuit) -> np.ndarray:
    """Dense matrix of a small circuit, column j = run on basis state j."""
    n = circuit.num_qubits
    dim = 1 << n
    out = np.empty((dim, dim), dtype=complex)
    for j in range(dim):
        amps = np.zeros(dim, dtype=complex)
        amps[j] = 1.0
        out[:, j] = run(circuit, State(n, amps)).amplitudes
    return out


# census ----------------------------------------------------------------

_BASIC = {("ry", 0): "ry", ("ry", 1): "cry", ("ry", 2): "ccry",
          ("h", 0): "h", ("x", 0): "x", ("x", 1): "cnot", ("swap", 0): "swap"}


def gate_category(g: Gate) -> str:
    k = g.num_controls
    name = _BASIC.get((g.kind, k))
    if name:
        return name
    if g.kind == "ry":
        return f"c{k}ry"
    return f"c{k}{g.kind}"


@dataclass
class GateCensus:
    ry: int = 0
    h: int = 0
    x: int = 0
    cry: int = 0
    ccry: int = 0
    cnot: int = 0
    swap: int = 0
    mcry: dict = field(default_factory=dict)   # k -> count, k >= 3
    other: dict = field(default_factory=dict)  # e.g. "c2x", "c1h", "c3swap"

    @property
    def total(self) -> int:
        return (self.ry + self.h + self.x + self.cry + self.ccry + self.cnot
                + self.swap + sum(self.mcry.values()) + sum(self.other.values()))

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in ("ry", "h", "x", "cry", "ccry", "cnot", "swap")}
        for k in sorted(self.mcry):
            d[f"c{k}ry"] = self.mcry[k]
        d.update(sorted(self.other.items()))
        d["total"] = self.total
        return d


def gate_census(circuit) -> GateCensus:
    gates = circuit.gates if isinstance(circuit, Circuit) else circuit
    counts = Counter(gate_category(g) for g in gates)
    cen = GateCensus()
    for name, num in counts.items():
        if hasattr(cen, name) and name not in ("mcry", "other"):
            setattr(cen, name, num)
        elif name.endswith("ry"):
            cen.mcry[int(name[1:-2])] = num
        else:
            cen.other[name] = num
    return cen
