"""Simulation sweeps and gate bookkeeping built on the compiler and oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, full_decompose, gate_census, input_state, run
from .compiler.builders import assemble
from .compiler.plan import CompiledPlan
from .compiler.series import FourierSeries
from .oracle import eval_plan_probability
from .statevector import prob_of_outcome

SWEEP_COLUMNS = ("x", "p1_sim", "p1_theory", "f_target", "c_f_plus_half")


def simulate_p1(plan: CompiledPlan, x, circuit: Circuit | None = None) -> np.ndarray:
    """P(q_N = 1) of the assembled circuit at each x, by exact simulation."""
    circuit = circuit or assemble(plan)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(xs.shape)
    for i, xv in enumerate(xs):
        st = run(circuit, input_state(plan.layout, float(plan.input_angle(xv)), circuit.num_qubits))
        out[i] = prob_of_outcome(st, plan.layout.readout, 1)
    return out


def plan_series(plan: CompiledPlan) -> FourierSeries:
    """The series a plan encodes, recovered from its slots (per unit C)."""
    z = np.zeros(max(s.n for s in plan.slots) + 1, dtype=complex)
    for s in plan.slots:
        amp = s.sign * s.gamma * s.amplitude / plan.C
        poly = np.array([1.0 + 0j])
        for b in s.beta:
            poly = np.convolve(poly, [np.exp(1j * b) / 2, 0, np.exp(-1j * b) / 2])
        z[1:s.n + 1] += amp * 2 * poly[s.n + 1:]
    terms = tuple((m, abs(z[m]), float(np.angle(z[m])))
                  for m in range(1, len(z)) if abs(z[m]) > 1e-14)
    return FourierSeries(terms or ((1, 0.0, 0.0),), plan.period)


@dataclass
class SweepResult:
    rows: np.ndarray  # columns as SWEEP_COLUMNS

    @property
    def max_error(self) -> float:
        return float(np.max(np.abs(self.rows[:, 1] - self.rows[:, 4])))

    def to_csv(self) -> str:
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(f"{v:.17g}" for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def sweep(plan: CompiledPlan, xmin: float, xmax: float, steps: int) -> SweepResult:
    xs = np.linspace(xmin, xmax, int(steps))
    series = plan.source or plan_series(plan)
    sim = simulate_p1(plan, xs)
    theory = np.asarray(eval_plan_probability(plan, xs), dtype=float)
    f = np.asarray(series(xs), dtype=float)
    return SweepResult(np.column_stack([xs, sim, theory, f, plan.C * f + 0.5]))


def complexity_bookkeeping(plan: CompiledPlan) -> dict:
    """Circuit sizes next to the N^2 ceil(log2 N)^2 scaling figures."""
    N = plan.layout.N
    lg = max(1, math.ceil(math.log2(N))) if N > 1 else 1
    circ = assemble(plan)
    return {
        "N": N,
        "M": plan.layout.M,
        "qubits": circ.num_qubits,
        "gates": len(circ),
        "gates_decomposed": len(full_decompose(circ)),
        "N2_log2N_sq": N * N * lg * lg,
        "N_log2N_sq": N * lg * lg,
    }


def census_pair(plan: CompiledPlan):
    circ = assemble(plan)
    return gate_census(circ), gate_census(full_decompose(circ))
