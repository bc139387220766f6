"""OpenQASM 2.0 text for lowered circuits.

Accepted gates: ry, h, x, cx and cry, all with positive controls; run
``full_decompose`` first.  ``cry`` is taken from qelib1.inc unless
``define_cry`` is set, in which case an equivalent definition is written
into the file.
"""
from __future__ import annotations

from ..errors import DecompositionError
from .ir import Circuit

_CRY_DEF = "gate cry(theta) a,b { ry(theta/2) b; cx a,b; ry(-theta/2) b; cx a,b; }"


def _line(g):
    if any(p == 0 for _, p in g.controls):
        raise DecompositionError(f"negative control left in {g!r}")
    k = g.num_controls
    if g.kind == "ry" and k == 0:
        return f"ry({g.angle:.17g}) q[{g.targets[0]}];"
    if g.kind == "ry" and k == 1:
        return f"cry({g.angle:.17g}) q[{g.controls[0][0]}],q[{g.targets[0]}];"
    if g.kind == "h" and k == 0:
        return f"h q[{g.targets[0]}];"
    if g.kind == "x" and k == 0:
        return f"x q[{g.targets[0]}];"
    if g.kind == "x" and k == 1:
        return f"cx q[{g.controls[0][0]}],q[{g.targets[0]}];"
    raise DecompositionError(f"{g!r} is outside the export gate set")


def to_qasm(circuit: Circuit, measure: int | None = None, define_cry: bool = False) -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    if define_cry:
        lines.append(_CRY_DEF)
    lines.append(f"qreg q[{circuit.num_qubits}];")
    if measure is not None:
        lines.append("creg c[1];")
    lines += [_line(g) for g in circuit.gates]
    if measure is not None:
        lines.append(f"measure q[{measure}] -> c[0];")
    return "\n".join(lines) + "\n"


GATE_PREFIXES = ("ry(", "cry(", "h ", "x ", "cx ")


def qasm_gate_lines(text: str):
    return [ln for ln in text.splitlines() if ln.startswith(GATE_PREFIXES)]
