"""Circuit construction: U_pre, the U_n chains and the full assembly.

Chain U_n (n >= 2, "mirror" variant) on data qubits q_1..q_n and the
variant qubit q''_1 (put in |+> by a Hadamard):

* Ry(theta_1) on q_1,
* link 2 as four doubly-controlled rotations on q_2 keyed by (q''_1, q_1):
  (0,0) -> theta_2, (0,1) -> theta'_2, (1,0) -> theta'_2, (1,1) -> theta_2,
* links k >= 3 as a pair CRy(theta_k) on q_{k-1} = 0, CRy(theta'_k) on
  q_{k-1} = 1,
* CNOT(q''_1 -> q_n), then SWAP(q_n, q_N) when n < N.

The q''_1 = 1 branch reads the head through a flipped control and then
flips the output, so the two branches average to
P(q_N = 1) = 1/2 + 1/2 cos(2x - 2w_1) prod_k |sin(v_k - w_k)| cos(2x - beta_k)
for any angles.  The "reference" variant instead drives the flipped
branch's link 2 from q''_2 (also in |+>), i.e. from a fresh |+> head, and
halves that amplitude.
"""
from __future__ import annotations

import math

import numpy as np

from ..circuit import Circuit, RegisterLayout
from ..errors import CapacityError, ValidationError
from ..gates import Gate, ccry, cnot, cry, h, ry, swap, x
from .plan import CompiledPlan
from .slots import SlotSpec


# U_pre -----------------------------------------------------------------------

def _check_gamma(gamma):
    g = np.asarray(gamma, dtype=float).ravel()
    M = int(round(math.log2(g.size))) if g.size else -1
    if g.size == 0 or g.size != 1 << M:
        raise ValidationError("weight vector length must be a power of two")
    if not np.all(np.isfinite(g)) or np.any(g < -1e-15):
        raise ValidationError("weights must be finite and non-negative")
    if abs(g.sum() - 1.0) > 1e-9:
        raise ValidationError(f"weights must sum to 1 (got {g.sum()!r})")
    return np.clip(g, 0.0, None), M


def upre_gates(gamma, qubits):
    """Rotation tree preparing sum_n sqrt(gamma_n)|n> on ``qubits`` (MSB first)."""
    g, M = _check_gamma(gamma)
    if len(qubits) != M:
        raise CapacityError(f"{g.size} weights need {M} qubits, got {len(qubits)}")
    gates = []
    for level in range(M):
        size = g.size >> level
        for prefix in range(1 << level):
            block = g[prefix * size:(prefix + 1) * size]
            lo, hi = block[: size // 2].sum(), block[size // 2:].sum()
            omega = math.atan2(math.sqrt(hi), math.sqrt(lo)) if lo + hi > 0 else 0.0
            ctrls = tuple((qubits[j], (prefix >> (level - 1 - j)) & 1) for j in range(level))
            gates.append(Gate("ry", (qubits[level],), ctrls, 2 * omega))
    return gates


def build_upre(gamma, qubits=None) -> Circuit:
    """U_pre on its own register; qubit M-1 carries the slot-label MSB by default."""
    g, M = _check_gamma(gamma)
    if qubits is None:
        qubits = list(range(M - 1, -1, -1))
    width = max(qubits) + 1 if len(qubits) else 1
    return Circuit(width, upre_gates(g, list(qubits)),
                   RegisterLayout(qprime=tuple(qubits)) if len(qubits) else None)


# U_n -----------------------------------------------------------------------------

def un_gates(slot: SlotSpec, layout: RegisterLayout, hadamards: bool = True):
    n, N = slot.n, layout.N
    if n > N:
        raise CapacityError(f"slot n={n} needs {n} data qubits, layout has {N}")
    q = layout.q
    th, tp = slot.theta, slot.theta_prime
    if n == 1:
        return [ry(q[-1], th[0])]
    if len(layout.qdprime) != 2:
        raise CapacityError("chains with n >= 2 need the two q'' qubits")
    d1, d2 = layout.qdprime
    gates = []
    if hadamards:
        gates.append(h(d1))
        if slot.variant == "reference":
            gates.append(h(d2))
    gates.append(ry(q[0], th[0]))
    if slot.variant == "mirror":
        gates += [ccry(d1, q[0], q[1], th[1], (0, 0)), ccry(d1, q[0], q[1], tp[1], (0, 1)),
                  ccry(d1, q[0], q[1], tp[1], (1, 0)), ccry(d1, q[0], q[1], th[1], (1, 1))]
    else:
        gates += [ccry(d1, q[0], q[1], th[1], (0, 0)), ccry(d1, q[0], q[1], tp[1], (0, 1)),
                  ccry(d1, d2, q[1], th[1], (1, 0)), ccry(d1, d2, q[1], tp[1], (1, 1))]
    for k in range(2, n):
        gates += [cry(q[k - 1], q[k], th[k], 0), cry(q[k - 1], q[k], tp[k], 1)]
    gates.append(cnot(d1, q[n - 1]))
    if n < N:
        gates.append(swap(q[n - 1], q[-1]))
    return gates


def build_un(slot: SlotSpec, layout: RegisterLayout) -> Circuit:
    """Bare chain circuit over ``layout`` (no slot controls, no sign flip)."""
    return Circuit(layout.num_qubits, un_gates(slot, layout), layout)


def build_chain(slot: SlotSpec) -> Circuit:
    """The plain ladder on n qubits: no q'', no output flip, no swap."""
    n = slot.n
    gates = [ry(0, slot.theta[0])]
    for k in range(1, n):
        gates += [cry(k - 1, k, slot.theta[k], 0), cry(k - 1, k, slot.theta_prime[k], 1)]
    return Circuit(n, gates, RegisterLayout(q=tuple(range(n))))


def encode_input(layout: RegisterLayout, angle: float, num_qubits: int | None = None) -> Circuit:
    """Ry(2x) on every data qubit: |psi(x)>^N from |0...0>."""
    return Circuit(num_qubits or layout.num_qubits,
                   [ry(qq, 2.0 * float(angle)) for qq in layout.q], layout)


# full circuit -----------------------------------------------------------------

def assemble(plan: CompiledPlan) -> Circuit:
    """U_pre on q', H on q''_1, then every slot chain controlled by its label."""
    lay = plan.layout
    qn = lay.readout
    gates = []
    if lay.M:
        gates += upre_gates(plan.gamma_vector(), list(lay.qprime))
    if any(s.n >= 2 for s in plan.slots):
        gates.append(h(lay.qdprime[0]))
    for label, slot in enumerate(plan.slots):
        if slot.variant != "mirror":
            raise ValidationError("assembled plans use mirror chains only")
        ctl = lay.label_controls(label)
        gates += [g.with_controls(ctl) for g in un_gates(slot, lay, hadamards=False)]
        if slot.sign < 0:
            gates.append(x(qn, ctl))
    if plan.has_residual:
        # swap the clean q''_2 onto q_N and rotate it to 1/2 + offset
        ctl = lay.label_controls(plan.residual_label)
        phi = 2.0 * math.asin(math.sqrt(min(max(0.5 + plan.residual_offset, 0.0), 1.0)))
        gates += [swap(lay.qdprime[1], qn, ctl), ry(qn, phi, ctl)]
    return Circuit(lay.num_qubits, gates, lay)
