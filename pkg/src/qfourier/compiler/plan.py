"""Back-substitution from a Fourier series to slot weights and phases.

Working per unit of the scaling constant C, the highest remaining
harmonic n with residual a e^{ib} is matched by d_n cos^n(2x - beta)
whose leading harmonic is d_n 2^{1-n} cos(2nx - n beta).  The residual
is written as a' cos(2nx + b') with b' in (-pi/2, pi/2] and a' signed,
which gives beta = ((-b') mod 2 pi) / n and d_n = 2^{n-1} a'.  The full
expansion of d_n cos^n is then subtracted from the lower harmonics and
the process repeats.  Even powers also leave a constant, collected in D.

Each slot carries weight gamma_n = C |d_n| / alpha^n.  The leftover
weight gamma_0 = 1 - sum gamma_n feeds a residual branch whose output
probability is 1/2 + r, with gamma_0 r = -C D cancelling that constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..circuit import RegisterLayout
from ..errors import InfeasibleError, ValidationError
from .series import FORMAT_VERSION, FourierSeries
from .slots import SlotSpec, wrap_angle

ZERO_TOL = 1e-12
GRID_POINTS = 4096


def cospower_laurent(phases) -> np.ndarray:
    """Coefficients c_m (m = -n..n) of prod_k cos(2x - phase_k) in powers of e^{2ix}."""
    poly = np.array([1.0 + 0j])
    for b in phases:
        poly = np.convolve(poly, np.array([np.exp(1j * b) / 2, 0.0, np.exp(-1j * b) / 2]))
    return poly


def signed_phase(z: complex, rel_tol: float = ZERO_TOL):
    """(a', b') with z = a' e^{i b'}, a' real and b' in (-pi/2, pi/2]."""
    re, im = z.real, z.imag
    if abs(re) <= rel_tol * abs(z):
        return im, math.pi / 2
    b = math.atan(im / re)
    return re / math.cos(b), b


@dataclass(frozen=True)
class SlotTerm:
    """d cos^n(2x - beta): one matched term per unit C."""

    n: int
    d: float
    beta: float


def back_substitute(series: FourierSeries):
    """Return (terms, D): the matched cos-power terms and the constant they add."""
    z = series.complex_coefficients()
    scale = max(abs(a) for _, a, _ in series.terms)
    terms = []
    dc = 0.0
    for n in range(series.N, 0, -1):
        if abs(z[n]) <= ZERO_TOL * max(scale, 1e-300):
            z[n] = 0.0
            continue
        a_p, b_p = signed_phase(z[n])
        beta = wrap_angle(((-b_p) % (2 * math.pi)) / n)
        d = a_p * 2.0 ** (n - 1)
        lau = cospower_laurent([beta] * n)
        z[1:n + 1] -= d * 2 * lau[n + 1:]
        dc += d * lau[n].real
        z[n] = 0.0
        terms.append(SlotTerm(n, d, beta))
    return terms, dc


@dataclass(frozen=True)
class CompiledPlan:
    C: float
    slots: tuple
    residual_weight: float
    layout: RegisterLayout
    residual_offset: float = 0.0
    period: float = math.pi
    source: FourierSeries | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(sorted(self.slots, key=lambda s: s.n)))
        total = sum(s.gamma for s in self.slots) + self.residual_weight
        if abs(total - 1.0) > 1e-9 or self.residual_weight < 0:
            raise ValidationError(f"slot weights must sum to 1 (got {total})")
        if abs(self.residual_offset) > 0.5 + 1e-12:
            raise ValidationError("residual offset must lie in [-1/2, 1/2]")
        if self.slots and max(s.n for s in self.slots) > self.layout.N:
            raise ValidationError("layout too small for the largest slot")
        if len(self.slots) + self.has_residual > 1 << self.layout.M:
            raise ValidationError("not enough q' qubits for all branches")

    @property
    def has_residual(self) -> bool:
        return self.residual_weight > 0

    @property
    def residual_label(self) -> int:
        return len(self.slots)

    def gamma_vector(self) -> np.ndarray:
        """Branch weights indexed by slot label, padded to 2^M."""
        g = np.zeros(1 << self.layout.M)
        for i, s in enumerate(self.slots):
            g[i] = s.gamma
        if self.has_residual:
            g[self.residual_label] = self.residual_weight
        return g

    def input_angle(self, x):
        """Angle fed to |psi(.)> for target abscissa x."""
        return np.asarray(x, dtype=float) * (math.pi / self.period)

    def to_dict(self) -> dict:
        d = {
            "format_version": FORMAT_VERSION,
            "C": self.C,
            "residual_weight": self.residual_weight,
            "slots": [s.to_dict() for s in self.slots],
            "layout": self.layout.to_dict(),
        }
        if self.residual_offset:
            d["residual_offset"] = self.residual_offset
        if self.period != math.pi:
            d["period"] = self.period
        if self.source is not None:
            d["series"] = self.source.to_dict()
        return d

    @classmethod
    def from_dict(cls, d) -> "CompiledPlan":
        if not isinstance(d, dict):
            raise ValidationError("plan record must be a JSON object")
        ver = d.get("format_version", FORMAT_VERSION)
        if ver != FORMAT_VERSION:
            raise ValidationError(f"unsupported plan format_version {ver}")
        try:
            return cls(float(d["C"]), tuple(SlotSpec.from_dict(s) for s in d["slots"]),
                       float(d["residual_weight"]), RegisterLayout.from_dict(d["layout"]),
                       float(d.get("residual_offset", 0.0)), float(d.get("period", math.pi)),
                       FourierSeries.from_dict(d["series"]) if "series" in d else None)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad plan record: {exc}") from exc


def _binding_slot(terms, c):
    """Highest-first cumulative weight: first slot where it passes 1."""
    acc = 0.0
    for t in terms:
        acc += c * abs(t.d) / 0.5
        if acc > 1.0:
            return t.n
    return None


def max_c(series: FourierSeries) -> float:
    terms, dc = back_substitute(series)
    g = sum(abs(t.d) / 0.5 for t in terms)
    if g == 0:
        raise ValidationError("series has no nonzero harmonic to encode")
    return 1.0 / (g + 2.0 * abs(dc))


def compile_plan(series: FourierSeries, c: float | None = None) -> CompiledPlan:
    """Compile ``series`` into slot weights, phases and angles.

    ``c`` pins the scaling constant; by default the largest feasible value
    is used.  Feasibility is sum_n C |d_n| / alpha^n + 2 C |D| <= 1, which
    is linear in C, so the maximum is available in closed form.
    """
    terms, dc = back_substitute(series)
    g = sum(abs(t.d) / 0.5 for t in terms)
    if g == 0:
        raise ValidationError("series has no nonzero harmonic to encode")
    cmax = 1.0 / (g + 2.0 * abs(dc))
    if c is None:
        c = cmax
    else:
        c = float(c)
        if not (math.isfinite(c) and c > 0):
            raise ValidationError("C must be positive and finite")
        if c > cmax * (1 + 1e-12):
            where = _binding_slot(terms, c)
            what = f"slot n={where}" if where is not None else "the residual branch"
            raise InfeasibleError(
                f"C={c:.6g} exceeds the feasible maximum {cmax:.6g}; binding at {what}",
                binding_slot=where)
    slots = []
    for t in terms:
        gamma = c * abs(t.d) / 0.5
        slots.append(SlotSpec.from_beta([t.beta] * t.n, gamma=min(gamma, 1.0),
                                        sign=1 if t.d > 0 else -1))
    gsum = sum(s.gamma for s in slots)
    resid = 1.0 - gsum
    if resid < ZERO_TOL:
        resid = 0.0
    offset = -c * dc / resid if resid > 0 else 0.0
    grid = np.arange(GRID_POINTS) * series.period / GRID_POINTS
    peak = float(np.max(np.abs(c * series(grid))))
    if peak > 0.5 + 1e-9:
        raise InfeasibleError(f"|C F| reaches {peak:.6g} > 1/2")
    branches = len(slots) + (resid > 0)
    M = math.ceil(math.log2(branches)) if branches > 1 else 0
    N = max(s.n for s in slots)
    layout = RegisterLayout.standard(M, N)
    return CompiledPlan(c, tuple(slots), resid, layout, offset, series.period, series)


def plan_terms(plan: CompiledPlan):
    """(n, sign*gamma*amplitude/C, beta) for each slot: the cos-power terms per unit C."""
    return [(s.n, s.sign * s.gamma * s.amplitude / plan.C, s.beta) for s in plan.slots]
