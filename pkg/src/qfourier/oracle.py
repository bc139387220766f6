"""Analytic reference values, kept independent of the circuit builders.

The cos-power expansion here uses the binomial formula directly, so it
cross-checks the convolution used by the compiler.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .compiler.plan import CompiledPlan
from .compiler.series import FourierSeries
from .compiler.slots import SlotSpec


def eval_target(series: FourierSeries, x):
    """F_N(x) = sum a_n cos(2 pi n x / T + b_n)."""
    return series(x)


def un_contribution(slot: SlotSpec, x):
    """P(q_N = 1) of the bare chain: amplitude * prod cos(2x - beta_k) + 1/2."""
    x = np.asarray(x, dtype=float)
    prod = np.ones_like(x)
    for b in slot.beta:
        prod = prod * np.cos(2 * x - b)
    out = slot.amplitude * prod + 0.5
    return out if out.ndim else float(out)


def eval_plan_probability(plan: CompiledPlan, x):
    """sum_m sign_m gamma_m alpha^m prod cos(2u - beta) + 1/2, u the input angle."""
    u = plan.input_angle(x)
    out = 0.5 + plan.residual_weight * plan.residual_offset + np.zeros_like(u)
    for s in plan.slots:
        out = out + s.sign * s.gamma * (un_contribution(s, u) - 0.5)
    return out if np.ndim(out) else float(out)


# chain recurrence -------------------------------------------------------------

@dataclass
class ChainTrace:
    A: np.ndarray
    B: np.ndarray
    P: np.ndarray          # P[0] is the head value, P[k] after link k
    eta: np.ndarray | None = None
    zeta: np.ndarray | None = None

    @property
    def final(self) -> float:
        return float(self.P[-1])


def _ab(w, v, x):
    A = 0.5 + 0.5 * np.cos(2 * x - 2 * np.asarray(w))
    B = 0.5 * (np.cos(2 * x - 2 * np.asarray(v)) - np.cos(2 * x - 2 * np.asarray(w)))
    return A, B


def chain_recurrence(angles, x: float, head: float = 0.0, merged: bool = False) -> ChainTrace:
    """Iterate P_k = A_k + B_k P_{k-1} over links given as (w, v) pairs.

    With ``merged`` the trace also carries eta_k, zeta_k such that
    eta_k cos(2x - zeta_k) = |sin(v-w)| cos(2x - beta_k) + cos(2x - 2w).
    """
    if not 0.0 <= head <= 1.0:
        raise ValueError("head probability must lie in [0, 1]")
    w = np.array([a[0] for a in angles], dtype=float)
    v = np.array([a[1] for a in angles], dtype=float)
    A, B = _ab(w, v, x)
    P = np.empty(len(w) + 1)
    P[0] = head
    for k in range(len(w)):
        P[k + 1] = A[k] + B[k] * P[k]
    tr = ChainTrace(A, B, P)
    if merged:
        tr.eta, tr.zeta = eta_zeta(w, v)
    return tr


def closed_form(angles, x: float, head: float = 0.0) -> float:
    """sum_j A_j prod_{k>j} B_k + head prod_k B_k."""
    w = np.array([a[0] for a in angles], dtype=float)
    v = np.array([a[1] for a in angles], dtype=float)
    A, B = _ab(w, v, x)
    total = head * np.prod(B)
    for j in range(len(w)):
        total += A[j] * np.prod(B[j + 1:])
    return float(total)


def link_beta(w, v):
    return np.arctan2(np.sin(2 * v) - np.sin(2 * w), np.cos(2 * v) - np.cos(2 * w))


def eta_zeta(w, v):
    """Amplitude and phase of |sin(v-w)| cos(2x - beta) + cos(2x - 2w)."""
    w, v = np.asarray(w, dtype=float), np.asarray(v, dtype=float)
    s = np.abs(np.sin(v - w))
    beta = link_beta(w, v)
    re = s * np.cos(beta) + np.cos(2 * w)
    im = s * np.sin(beta) + np.sin(2 * w)
    eta = np.sqrt(s * s + 1 + 2 * s * np.cos(2 * w - beta))
    return eta, np.arctan2(im, re)


# cos powers -------------------------------------------------------------------

def cospower_to_fourier(amplitude: float, phase: float, n: int):
    """Harmonic content of amplitude * cos^n(2x - phase).

    Returns (constant, FourierSeries or None): harmonic m = n, n-2, ... has
    amplitude amplitude * 2^{1-n} C(n, (n-m)/2) and phase -m * phase; the
    m = 0 term of an even power is the constant amplitude * 2^{-n} C(n, n/2).
    """
    n = int(n)
    if n < 0:
        raise ValueError("power must be >= 0")
    if n == 0:
        return float(amplitude), None
    const = 0.0
    terms = []
    for j in range(n // 2 + 1):
        m = n - 2 * j
        coef = math.comb(n, j) / 2.0 ** n
        if m == 0:
            const = amplitude * coef
        else:
            terms.append((m, 2 * amplitude * coef, -m * phase))
    return const, FourierSeries(tuple(terms))


def sum_cospowers(items):
    """Combine (amplitude, phase, n) cos-power terms into per-harmonic complex amplitudes."""
    nmax = max(n for _, _, n in items)
    z = np.zeros(nmax + 1, dtype=complex)
    for amp, ph, n in items:
        const, ser = cospower_to_fourier(amp, ph, n)
        z[0] += const
        if ser is not None:
            for m, a, b in ser.terms:
                z[m] += a * np.exp(1j * b)
    return z
