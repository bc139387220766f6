"""Gate record used by the simulator and the circuit IR."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import StructureError

KINDS = ("ry", "h", "x", "swap")


@dataclass(frozen=True)
class Gate:
    """A single (possibly controlled) gate.

    ``controls`` holds ``(qubit, polarity)`` pairs; polarity 1 fires on
    |1>, polarity 0 fires on |0>.  ``targets`` has one qubit, or two for
    ``swap``.  ``angle`` is only meaningful for ``ry``.
    """

    kind: str
    targets: tuple
    controls: tuple = ()
    angle: float | None = None

    def __post_init__(self):
        kind = self.kind.lower()
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        object.__setattr__(
            self, "controls", tuple((int(q), int(p)) for q, p in self.controls)
        )
        if kind not in KINDS:
            raise StructureError(f"unknown gate kind {self.kind!r}")
        want = 2 if kind == "swap" else 1
        if len(self.targets) != want:
            raise StructureError(f"{kind} needs {want} target(s), got {self.targets}")
        if kind == "ry":
            if self.angle is None or not math.isfinite(self.angle):
                raise StructureError("ry needs a finite angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise StructureError(f"{kind} takes no angle")
        for _, pol in self.controls:
            if pol not in (0, 1):
                raise StructureError("control polarity must be 0 or 1")
        qubits = self.qubits
        if len(set(qubits)) != len(qubits):
            raise StructureError(f"overlapping qubits in {self}")
        if min(qubits) < 0:
            raise StructureError("negative qubit index")

    @property
    def qubits(self) -> tuple:
        return tuple(q for q, _ in self.controls) + self.targets

    @property
    def num_controls(self) -> int:
        return len(self.controls)

    def with_controls(self, extra) -> "Gate":
        """Return a copy with ``extra`` (qubit, polarity) pairs prepended."""
        return Gate(self.kind, self.targets, tuple(extra) + self.controls, self.angle)

    def inverse(self) -> "Gate":
        if self.kind == "ry":
            return Gate("ry", self.targets, self.controls, -self.angle)
        return self

    def __repr__(self):
        ctl = "".join(f"{'' if p else '!'}{q}," for q, p in self.controls)
        arg = f"({self.angle:.6g})" if self.kind == "ry" else ""
        return f"{self.kind}{arg}[{ctl}->{','.join(map(str, self.targets))}]"


def ry(target, angle, controls=()):
    return Gate("ry", (target,), tuple(controls), angle)


def cry(control, target, angle, polarity=1):
    return Gate("ry", (target,), ((control, polarity),), angle)


def ccry(c1, c2, target, angle, polarities=(1, 1)):
    return Gate("ry", (target,), ((c1, polarities[0]), (c2, polarities[1])), angle)


def h(target, controls=()):
    return Gate("h", (target,), tuple(controls))


def x(target, controls=()):
    return Gate("x", (target,), tuple(controls))


def cnot(control, target, polarity=1):
    return Gate("x", (target,), ((control, polarity),))


def swap(a, b, controls=()):
    return Gate("swap", (a, b), tuple(controls))
