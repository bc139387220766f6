"""Decomposition passes.

Every pass returns a new circuit with the same unitary action.  The
multi-control expansion stays inside the real gate set
{Ry, H, X, CRy, CCRy, CNOT, SWAP}: it never needs a complex phase gate
and never allocates fresh qubits, but it does borrow idle qubits of the
register as dirty ancillas (their state is restored exactly).

Building blocks, all exact:

* Toffoli(a, b -> c) borrowing any fourth qubit d:
  CRy(pi)[c->d], CCRy(pi)[a,b->c], CRy(-pi)[c->d], CCRy(pi)[a,b->d].
  The first three gates and the last one form a doubly-controlled Z on
  (a, b, c); CCRy(pi) on c then completes the flip.  A fourth qubit is
  unavoidable: with real gates on three qubits only, every gate in the
  set has determinant +1 while the Toffoli has determinant -1.
* C^k X with k-2 dirty ancillas: the V-chain of 4(k-2) Toffolis.
* C^k X with a single dirty ancilla: split the controls in halves and
  use the V-chain for each half (4 calls).
* C^k Ry(t): CRy(t/2)[c_k->t], flip c_k by c_1..c_{k-1},
  CRy(-t/2)[c_k->t], unflip, C^{k-1} Ry(t/2).  The flip only needs to be
  exact up to a diagonal that it undoes itself, so for k = 3 it is a
  CCRy(pi) / CCRy(-pi) pair.

The resulting count for a k-controlled Ry is quadratic in k; see
``mcry_gate_count`` and ``MCRY_QUADRATIC_CONSTANT``.
"""
from __future__ import annotations

import math

from ..errors import DecompositionError
from ..gates import Gate, ccry, cnot, cry, x
from .ir import Circuit

PI = math.pi


def _x_conjugated(g: Gate, body):
    """Wrap ``body`` (built for all-positive controls) in X on negative controls."""
    neg = [x(q) for q, p in g.controls if p == 0]
    return neg + list(body) + neg


def _positive(g: Gate) -> Gate:
    return Gate(g.kind, g.targets, tuple((q, 1) for q, _ in g.controls), g.angle)


def _free_qubits(num_qubits, used):
    used = set(used)
    return [q for q in range(num_qubits) if q not in used]


# CC-Ry -> 2 CNOT + 3 CRy --------------------------------------------------

def _ccry_body(c1, c2, t, theta):
    return [cry(c2, t, theta / 2), cnot(c1, c2), cry(c2, t, -theta / 2),
            cnot(c1, c2), cry(c1, t, theta / 2)]


def decompose_ccry(circuit: Circuit) -> Circuit:
    out = []
    for g in circuit.gates:
        if g.kind == "ry" and g.num_controls == 2:
            (c1, _), (c2, _) = g.controls
            out += _x_conjugated(g, _ccry_body(c1, c2, g.targets[0], g.angle))
        else:
            out.append(g)
    return circuit.replace_gates(out)


# multi-controlled X ---------------------------------------------------------

def toffoli(a, b, c, d):
    """Exact CCX(a, b -> c) borrowing qubit ``d`` (left unchanged)."""
    return [cry(c, d, PI), ccry(a, b, c, PI), cry(c, d, -PI), ccry(a, b, d, PI)]


def _tof(a, b, c, pool):
    for d in pool:
        if d not in (a, b, c):
            return toffoli(a, b, c, d)
    raise DecompositionError("Toffoli needs a fourth qubit")


def _vchain(ctrls, target, anc):
    m = len(ctrls)
    pool = list(ctrls) + [target] + list(anc)
    half = _tof(ctrls[m - 1], anc[m - 3], target, pool)
    for i in range(m - 2, 1, -1):
        half += _tof(ctrls[i], anc[i - 2], anc[i - 1], pool)
    half += _tof(ctrls[0], ctrls[1], anc[0], pool)
    for i in range(2, m - 1):
        half += _tof(ctrls[i], anc[i - 2], anc[i - 1], pool)
    return half + half


def mcx(ctrls, target, free):
    """Exact positive-control C^k X using idle qubits ``free`` as dirty ancillas."""
    ctrls = list(ctrls)
    free = list(free)
    k = len(ctrls)
    if k == 0:
        return [x(target)]
    if k == 1:
        return [cnot(ctrls[0], target)]
    if k == 2:
        if not free:
            raise DecompositionError("a doubly-controlled X needs one spare qubit")
        return toffoli(ctrls[0], ctrls[1], target, free[0])
    if len(free) >= k - 2:
        return _vchain(ctrls, target, free[: k - 2])
    if not free:
        raise DecompositionError(f"C^{k}X needs at least one spare qubit")
    a = free[0]
    m1 = (k + 1) // 2
    first, second = ctrls[:m1], ctrls[m1:]
    part_a = mcx(first, a, second + [target] + free[1:])
    part_b = mcx(second + [a], target, first + free[1:])
    return part_b + part_a + part_b + part_a


# multi-controlled Ry --------------------------------------------------------

def mcry(theta, ctrls, target, free):
    """Exact positive-control C^k Ry(theta)."""
    ctrls = list(ctrls)
    k = len(ctrls)
    if k == 0:
        return [Gate("ry", (target,), (), theta)]
    if k == 1:
        return [cry(ctrls[0], target, theta)]
    if k == 2:
        return [ccry(ctrls[0], ctrls[1], target, theta)]
    ck, rest = ctrls[-1], ctrls[:-1]
    if k == 3:
        flip = [ccry(rest[0], rest[1], ck, PI)]
    else:
        flip = mcx(rest, ck, [target] + list(free))
    unflip = [g.inverse() for g in reversed(flip)]
    return ([cry(ck, target, theta / 2)] + flip + [cry(ck, target, -theta / 2)]
            + unflip + mcry(theta / 2, rest, target, list(free) + [ck]))


def mcry_gate_count(k: int) -> int:
    """Gate count of the expansion of a k-controlled Ry with no idle qubits."""
    return len(mcry(0.1, list(range(k)), k, []))


# c with mcry_gate_count(k) <= c * k**2 for every k >= 1.  Each recursion
# step adds two single-ancilla C^{k-1}X flips of about 32 k gates, so the
# count approaches 32 k^2 from below (ratio ~24 at k = 40).
MCRY_QUADRATIC_CONSTANT = 32


def _expand_gate(g: Gate, num_qubits: int):
    k = g.num_controls
    if g.kind == "ry" and k <= 2:
        return [g]
    if g.kind == "x" and k <= 1:
        return [g]
    if g.kind in ("h", "swap") and k == 0:
        return [g]
    ctrls = [q for q, _ in g.controls]
    free = _free_qubits(num_qubits, g.qubits)
    if g.kind == "ry":
        body = mcry(g.angle, ctrls, g.targets[0], free)
    elif g.kind == "x":
        body = mcx(ctrls, g.targets[0], free)
    elif g.kind == "h":
        t = g.targets[0]
        # H = X Ry(pi/2)
        body = mcry(PI / 2, ctrls, t, free) + mcx(ctrls, t, free)
    else:
        a, b = g.targets
        body = [cnot(b, a)] + mcx(ctrls + [a], b, free) + [cnot(b, a)]
    return _x_conjugated(g, body)


def expand_multicontrol(circuit: Circuit) -> Circuit:
    out = []
    for g in circuit.gates:
        out += _expand_gate(g, circuit.num_qubits)
    return circuit.replace_gates(out)


# export lowering ------------------------------------------------------------

def lower_negative_controls(circuit: Circuit) -> Circuit:
    out = []
    for g in circuit.gates:
        if any(p == 0 for _, p in g.controls):
            out += _x_conjugated(g, [_positive(g)])
        else:
            out.append(g)
    return circuit.replace_gates(out)


def decompose_swap(circuit: Circuit) -> Circuit:
    out = []
    for g in circuit.gates:
        if g.kind == "swap" and g.num_controls == 0:
            a, b = g.targets
            out += [cnot(a, b), cnot(b, a), cnot(a, b)]
        else:
            out.append(g)
    return circuit.replace_gates(out)


def full_decompose(circuit: Circuit) -> Circuit:
    """Lower to {Ry, H, X, CRy, CNOT} with positive controls only."""
    c = expand_multicontrol(circuit)
    c = decompose_ccry(c)
    c = lower_negative_controls(c)
    return decompose_swap(c)
