"""Seeded shot sampling of the readout qubit.

Shots are independent Bernoulli(p) draws from the exact marginal of the
measured qubit.  Draws come from numpy's PCG64 bit generator seeded with
the given integer: ``Generator(PCG64(seed)).random(shots) < p``.  PCG64
output is specified bit-for-bit, so records are reproducible across runs
and platforms.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .circuit import Circuit, input_state, run
from .errors import ValidationError
from .statevector import prob_of_outcome


@dataclass(frozen=True)
class ShotRecord:
    x: float
    shots: int
    ones: int
    seed: int
    p_exact: float

    @property
    def p_hat(self) -> float:
        return self.ones / self.shots

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _check(shots, seed):
    if int(shots) != shots or shots < 1:
        raise ValidationError("shots must be a positive integer")
    if int(seed) != seed or not 0 <= seed < 2 ** 64:
        raise ValidationError("seed must be an integer in [0, 2**64)")


def sample_bernoulli(p: float, shots: int, seed: int) -> int:
    """Number of ones in ``shots`` Bernoulli(p) draws."""
    _check(shots, seed)
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    return int(np.count_nonzero(rng.random(int(shots)) < p))


def sample_shots(circuit: Circuit, input_x: float, qubit: int, shots: int, seed: int,
                 angle: float | None = None) -> ShotRecord:
    """Run ``circuit`` on |Psi_in(x)> and sample ``qubit``.

    ``angle`` overrides the encoding angle when the circuit's variable is
    rescaled (period other than pi); by default it equals ``input_x``.
    """
    _check(shots, seed)
    if circuit.layout is None:
        raise ValidationError("circuit has no register layout to load x into")
    ang = input_x if angle is None else angle
    state = run(circuit, input_state(circuit.layout, ang, circuit.num_qubits))
    p = prob_of_outcome(state, qubit, 1)
    return ShotRecord(float(input_x), int(shots), sample_bernoulli(p, shots, seed), int(seed), p)
