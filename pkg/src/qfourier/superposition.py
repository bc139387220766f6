"""Superposed inputs entangled with an external register Q.

The experiment loads |psi(x_0)>^3 and |psi(x_1)>^3 on the two branches of
a Q qubit prepared by Ry(theta), then runs a bare U_3 and reads P(q_3 = 0).
The U_3 reproducing the published curve uses the reference chain with
theta = 0 on links and the head at -beta, so every link has factor
|cos beta| and the head contributes -cos(2x - beta):

    P_0(x) = 1/2 + kappa cos^3(2x - beta),  kappa = cos^2(beta) / 4.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, RegisterLayout, run
from .compiler.builders import un_gates
from .compiler.slots import SlotSpec
from .errors import ValidationError
from .gates import ry
from .oracle import un_contribution
from .statevector import State, prob_of_outcome

U3_BETA = 0.2384
KAPPA_QUOTED = 0.2362
LAYOUT = RegisterLayout(qdprime=(3, 4), q=(0, 1, 2), extra=(5,))


@dataclass(frozen=True)
class SuperpositionSpec:
    x_values: tuple
    c: tuple

    def __post_init__(self):
        xs = tuple(float(v) for v in self.x_values)
        cs = tuple(complex(v) for v in self.c)
        if not xs or len(xs) != len(cs):
            raise ValidationError("need one amplitude per input")
        if abs(sum(abs(v) ** 2 for v in cs) - 1.0) > 1e-12:
            raise ValidationError("branch amplitudes must be normalized")
        object.__setattr__(self, "x_values", xs)
        object.__setattr__(self, "c", cs)

    @classmethod
    def two_inputs(cls, x0, x1, theta_sup):
        return cls((x0, x1), (math.cos(theta_sup / 2), math.sin(theta_sup / 2)))


def u3_slot(beta: float = U3_BETA, variant: str = "reference",
            convention: str = "supplement") -> SlotSpec:
    return SlotSpec.from_beta([beta] * 3, convention=convention, variant=variant)


def build_superposition_circuit(x0, x1, theta_sup, slot: SlotSpec | None = None) -> Circuit:
    """Six qubits: q_1..q_3 = 0..2, q''_1, q''_2 = 3, 4, Q = 5."""
    slot = slot or u3_slot()
    if slot.n != 3:
        raise ValidationError("the superposition circuit uses a U_3 slot")
    Q = LAYOUT.extra[0]
    gates = [ry(Q, theta_sup)]
    gates += [ry(q, 2 * x0, ((Q, 0),)) for q in LAYOUT.q]
    gates += [ry(q, 2 * x1, ((Q, 1),)) for q in LAYOUT.q]
    gates += un_gates(slot, LAYOUT)
    return Circuit(6, gates, LAYOUT)


def p0_simulated(x0, x1, theta_sup, slot: SlotSpec | None = None) -> float:
    st = run(build_superposition_circuit(x0, x1, theta_sup, slot))
    return prob_of_outcome(st, LAYOUT.readout, 0)


def kappa(slot: SlotSpec | None = None) -> float:
    """Coefficient of cos^3(2x - beta) in P_0 of the bare chain."""
    slot = slot or u3_slot()
    peak = slot.beta[-1] / 2
    return 0.5 - un_contribution(slot, peak)


def p0_theory(x0, x1, theta_sup, slot: SlotSpec | None = None):
    slot = slot or u3_slot()
    k, b = kappa(slot), slot.beta[-1]
    c0, c1 = math.cos(theta_sup / 2) ** 2, math.sin(theta_sup / 2) ** 2
    return (c0 * (k * np.cos(2 * np.asarray(x0) - b) ** 3 + 0.5)
            + c1 * (k * np.cos(2 * np.asarray(x1) - b) ** 3 + 0.5))


def superposed_p0(spec: SuperpositionSpec, slot: SlotSpec | None = None) -> float:
    """P(q_N = 0) after U_n on sum_l c_l |Psi_in(x_l)> |l>_Q for any L."""
    slot = slot or u3_slot()
    n = slot.n
    nq = max(1, math.ceil(math.log2(len(spec.x_values))))
    lay = RegisterLayout(q=tuple(range(n)), qdprime=(n, n + 1),
                         extra=tuple(range(n + 2, n + 2 + nq)))
    width = n + 2 + nq
    amps = np.zeros(1 << width, dtype=complex)
    for label, (xl, cl) in enumerate(zip(spec.x_values, spec.c)):
        one = np.array([math.cos(xl), math.sin(xl)])
        data = np.ones(1)
        for _ in range(n):
            data = np.kron(one, data)
        amps[(label << (n + 2)):(label << (n + 2)) + (1 << n)] += cl * data
    st = run(Circuit(width, un_gates(slot, lay), lay), State(width, amps))
    return prob_of_outcome(st, lay.readout, 0)
