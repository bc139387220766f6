import numpy as np

from qfourier.circuit import Circuit, run
from qfourier.statevector import State


def random_state(n, rng):
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return State(n, v / np.linalg.norm(v))


def max_state_diff(c1: Circuit, c2: Circuit, rng, trials=20):
    worst = 0.0
    for _ in range(trials):
        st = random_state(c1.num_qubits, rng)
        a, b = run(c1, st).amplitudes, run(c2, st).amplitudes
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst
