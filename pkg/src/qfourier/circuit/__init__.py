"""Gate IR, execution, decomposition passes and OpenQASM export."""
from ..gates import Gate, ccry, cnot, cry, h, ry, swap, x
from .ir import (Circuit, GateCensus, RegisterLayout, gate_category, gate_census,
                 input_state, run, unitary)
from .passes import (MCRY_QUADRATIC_CONSTANT, decompose_ccry, decompose_swap,
                     expand_multicontrol, full_decompose, lower_negative_controls,
                     mcry, mcry_gate_count, mcx, toffoli)

__all__ = [
    "Gate", "Circuit", "GateCensus", "RegisterLayout", "run", "unitary", "input_state",
    "gate_census", "gate_category", "decompose_ccry", "expand_multicontrol",
    "decompose_swap", "lower_negative_controls", "full_decompose", "mcry", "mcx",
    "toffoli", "mcry_gate_count", "MCRY_QUADRATIC_CONSTANT",
    "ry", "cry", "ccry", "h", "x", "cnot", "swap",
]

from .qasm import qasm_gate_lines, to_qasm  # noqa: E402

__all__ += ["to_qasm", "qasm_gate_lines"]
