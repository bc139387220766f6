import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfourier.errors import CapacityError, StructureError, ValidationError
from qfourier.gates import Gate, cry, h, ry, swap, x
from qfourier.statevector import (MAX_QUBITS, State, apply_gate, marginal, new_state,
                                  prepare_psi_x, prob_of_outcome)


def test_new_state_basis():
    assert np.array_equal(new_state(1).amplitudes, [1, 0])
    s = new_state(3)
    assert s.amplitudes.size == 8 and s.amplitudes[0] == 1 and s.norm == 1


@pytest.mark.parametrize("n", [0, MAX_QUBITS + 1])
def test_new_state_capacity(n):
    with pytest.raises(CapacityError):
        new_state(n)


@pytest.mark.parametrize("xv, expect", [(0.0, [1, 0]), (math.pi / 2, [0, 1]),
                                        (math.pi / 4, [2 ** -0.5, 2 ** -0.5])])
def test_prepare_psi_x(xv, expect):
    s = prepare_psi_x(new_state(1), 0, xv)
    assert np.allclose(s.amplitudes, expect, atol=1e-15)


def test_prepare_psi_x_bad_index():
    with pytest.raises(ValidationError):
        prepare_psi_x(new_state(2), 2, 0.1)


def test_x_on_qubit0_is_lsb():
    s = apply_gate(new_state(2), x(0))
    assert np.allclose(s.amplitudes, [0, 1, 0, 0])


def test_ry_zero_is_identity():
    rng = np.random.default_rng(0)
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    s = State(3, v / np.linalg.norm(v))
    assert np.array_equal(apply_gate(s, ry(1, 0.0)).amplitudes, s.amplitudes)


def test_ry_convention():
    phi = 0.73
    s = apply_gate(new_state(1), ry(0, phi))
    assert np.allclose(s.amplitudes, [math.cos(phi / 2), math.sin(phi / 2)])
    s1 = apply_gate(apply_gate(new_state(1), x(0)), ry(0, phi))
    assert np.allclose(s1.amplitudes, [-math.sin(phi / 2), math.cos(phi / 2)])


def test_negative_control_not_satisfied():
    s = apply_gate(new_state(2), x(1))            # control qubit 1 in |1>
    out = apply_gate(s, cry(1, 0, 1.2, polarity=0))
    assert np.array_equal(out.amplitudes, s.amplitudes)


def test_control_on_zero_fires():
    out = apply_gate(new_state(2), cry(1, 0, math.pi, polarity=0))
    assert np.allclose(out.amplitudes, [0, 1, 0, 0])


def test_swap_and_controlled_swap():
    s = apply_gate(new_state(3), x(0))
    assert np.allclose(apply_gate(s, swap(0, 2)).amplitudes, np.eye(8)[4])
    assert np.allclose(apply_gate(s, swap(0, 2, ((1, 1),))).amplitudes, s.amplitudes)


def test_overlap_rejected():
    with pytest.raises(StructureError):
        Gate("ry", (0,), ((0, 1),), 0.1)
    with pytest.raises(StructureError):
        Gate("swap", (1, 1))


def test_prob_single_qubit():
    s = prepare_psi_x(new_state(1), 0, math.pi / 4)
    assert prob_of_outcome(s, 0, 1) == pytest.approx(0.5, abs=1e-15)
    assert prob_of_outcome(new_state(1), 0, 1) == 0


def test_marginal_matches_dense_sum():
    rng = np.random.default_rng(3)
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    s = State(4, v / np.linalg.norm(v))
    p = np.abs(s.amplitudes) ** 2
    for q in range(4):
        ones = sum(p[i] for i in range(16) if (i >> q) & 1)
        assert marginal(s, q)[1] == pytest.approx(ones, abs=1e-15)


gate_strategy = st.one_of(
    st.builds(lambda t, a: ry(t, a), st.integers(0, 3), st.floats(-7, 7)),
    st.builds(lambda t: h(t), st.integers(0, 3)),
    st.builds(lambda c, t, a, p: cry(c, t, a, p) if c != t else ry(t, a),
              st.integers(0, 3), st.integers(0, 3), st.floats(-7, 7), st.integers(0, 1)),
    st.builds(lambda a, b: swap(a, b) if a != b else x(a), st.integers(0, 3), st.integers(0, 3)),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(gate_strategy, max_size=25))
def test_norm_and_marginals_preserved(gates):
    s = new_state(4)
    for g in gates:
        s = apply_gate(s, g)
    assert abs(s.norm - 1) <= 1e-12
    for q in range(4):
        assert abs(prob_of_outcome(s, q, 0) + prob_of_outcome(s, q, 1) - 1) <= 1e-12


def test_deterministic_bitwise():
    gates = [h(0), cry(0, 1, 0.4), ry(2, 1.1), swap(1, 2, ((0, 0),))]
    a = b = new_state(3)
    for g in gates:
        a = apply_gate(a, g)
        b = apply_gate(b, g)
    assert a.amplitudes.tobytes() == b.amplitudes.tobytes()


def test_apply_gate_is_pure():
    s = new_state(2)
    before = s.amplitudes.copy()
    apply_gate(s, h(0))
    assert np.array_equal(s.amplitudes, before)
