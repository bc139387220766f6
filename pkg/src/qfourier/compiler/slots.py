"""Chain angles and the per-slot record.

A chain U_n rotates q_1 by theta_1 and then, for each link k >= 2, rotates
q_k by theta_k when q_{k-1} = 0 and by theta'_k when q_{k-1} = 1.  With the
Ry convention used by the simulator, a rotation theta applied to
|psi(x)> = Ry(2x)|0> leaves |1> with probability cos^2(x - w) where
w = pi/2 - theta/2.  Writing w, v for the two angles of a link,

    B_k(x) = (cos(2x - 2v) - cos(2x - 2w)) / 2 = |sin(v - w)| cos(2x - beta_k),
    beta_k = atan2(sin 2v - sin 2w, cos 2v - cos 2w).

The head contributes cos(2x - 2 w_1), so beta_1 = 2 w_1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

VARIANTS = ("mirror", "reference")
CONVENTIONS = ("canonical", "supplement")


def wrap_angle(a: float) -> float:
    """Representative of ``a`` in (-pi, pi]."""
    r = math.remainder(a, 2 * math.pi)
    return math.pi if r == -math.pi else r


def w_from_theta(theta):
    return math.pi / 2 - theta / 2


def theta_from_w(w):
    return math.pi - 2 * w


def link_phase(w: float, v: float) -> float:
    """beta of a link from its (w, v) pair."""
    return math.atan2(math.sin(2 * v) - math.sin(2 * w), math.cos(2 * v) - math.cos(2 * w))


def link_factor(w: float, v: float) -> float:
    return abs(math.sin(v - w))


def angles_for_beta(beta, convention: str = "canonical"):
    """(theta, theta_prime) tuples realizing the phases ``beta``.

    ``canonical`` picks v - w = pi/2 on every link, so each link has unit
    factor and reproduces its beta exactly:
    head theta = pi - beta, link theta = -beta, theta' = -beta - pi.

    ``supplement`` keeps theta = 0 on links and
    theta' = -2 [(beta - pi/2) mod pi] with the head at theta = -beta;
    link factors are then |cos beta| and the head phase is shifted by pi.
    """
    beta = [float(b) for b in beta]
    if not beta:
        raise ValidationError("a chain needs at least one phase")
    if convention == "canonical":
        theta = [math.pi - beta[0]] + [-b for b in beta[1:]]
        theta_p = [theta[0]] + [-b - math.pi for b in beta[1:]]
    elif convention == "supplement":
        theta = [-beta[0]] + [0.0] * (len(beta) - 1)
        theta_p = [theta[0]] + [-2.0 * ((b - math.pi / 2) % math.pi) for b in beta[1:]]
    else:
        raise ValidationError(f"unknown angle convention {convention!r}")
    return tuple(theta), tuple(theta_p)


@dataclass(frozen=True)
class SlotSpec:
    """One chain of the plan.

    ``beta`` are the phases the stored angles realize, so they always
    satisfy the link relation above.  ``gamma`` is the branch weight and
    ``sign`` selects whether the chain output is flipped.  ``variant``
    names the circuit realization: ``mirror`` (amplitude alpha) or
    ``reference`` (amplitude alpha / 2, head replaced by |+>).
    """

    n: int
    theta: tuple
    theta_prime: tuple
    gamma: float = 1.0
    sign: int = 1
    variant: str = "mirror"

    def __post_init__(self):
        n = int(self.n)
        object.__setattr__(self, "n", n)
        th = tuple(float(t) for t in self.theta)
        tp = tuple(float(t) for t in self.theta_prime)
        if n < 1 or len(th) != n or len(tp) != n:
            raise ValidationError(f"slot of length {n} needs {n} theta and theta' values")
        if not all(math.isfinite(t) for t in th + tp):
            raise ValidationError("non-finite slot angle")
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "theta_prime", tp)
        if self.sign not in (1, -1):
            raise ValidationError("sign must be +1 or -1")
        if not (math.isfinite(self.gamma) and 0.0 <= self.gamma <= 1.0 + 1e-12):
            raise ValidationError(f"gamma must lie in [0, 1], got {self.gamma}")
        if self.variant not in VARIANTS:
            raise ValidationError(f"unknown variant {self.variant!r}")

    @classmethod
    def from_beta(cls, beta, gamma=1.0, sign=1, convention="canonical", variant="mirror"):
        theta, theta_p = angles_for_beta(beta, convention)
        return cls(len(theta), theta, theta_p, gamma, sign, variant)

    @classmethod
    def from_wv(cls, w, v, gamma=1.0, sign=1, variant="mirror"):
        """Slot from per-link (w, v); v[0] is ignored for the head."""
        theta = tuple(theta_from_w(a) for a in w)
        theta_p = (theta[0],) + tuple(theta_from_w(a) for a in v[1:])
        return cls(len(theta), theta, theta_p, gamma, sign, variant)

    @property
    def w(self) -> tuple:
        return tuple(w_from_theta(t) for t in self.theta)

    @property
    def v(self) -> tuple:
        return (self.w[0],) + tuple(w_from_theta(t) for t in self.theta_prime[1:])

    @property
    def beta(self) -> tuple:
        w, v = self.w, self.v
        return (wrap_angle(2 * w[0]),) + tuple(link_phase(w[k], v[k]) for k in range(1, self.n))

    @property
    def link_factors(self) -> tuple:
        w, v = self.w, self.v
        return tuple(link_factor(w[k], v[k]) for k in range(1, self.n))

    @property
    def alpha(self) -> float:
        """alpha^n = 1/2 prod_k |sin(v_k - w_k)|."""
        return 0.5 * float(np.prod(self.link_factors)) if self.n > 1 else 0.5

    @property
    def amplitude(self) -> float:
        """Coefficient of prod cos(2x - beta_k) in P(q_N = 1) of the bare chain."""
        return self.alpha if self.variant == "mirror" or self.n == 1 else 0.5 * self.alpha

    def cos_product(self, x):
        x = np.asarray(x, dtype=float)
        out = np.ones_like(x)
        for b in self.beta:
            out = out * np.cos(2 * x - b)
        return out

    def p1(self, x):
        """P(q_N = 1) of the bare chain on |psi(x)>^N, before the sign flip."""
        return 0.5 + self.amplitude * self.cos_product(x)

    def replace(self, **kw) -> "SlotSpec":
        d = dict(n=self.n, theta=self.theta, theta_prime=self.theta_prime,
                 gamma=self.gamma, sign=self.sign, variant=self.variant)
        d.update(kw)
        return SlotSpec(**d)

    def to_dict(self) -> dict:
        d = {"n": self.n, "gamma": self.gamma, "sign": self.sign, "beta": list(self.beta),
             "theta": list(self.theta), "theta_prime": list(self.theta_prime)}
        if self.variant != "mirror":
            d["variant"] = self.variant
        return d

    @classmethod
    def from_dict(cls, d) -> "SlotSpec":
        try:
            slot = cls(d["n"], tuple(d["theta"]), tuple(d["theta_prime"]), float(d["gamma"]),
                       int(d["sign"]), d.get("variant", "mirror"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad slot record: {exc}") from exc
        if "beta" in d:
            got = np.asarray(slot.beta)
            want = np.asarray(d["beta"], dtype=float)
            if got.shape != want.shape or np.max(np.abs(np.angle(np.exp(1j * (got - want))))) > 1e-9:
                raise ValidationError("slot beta does not match its angles")
        return slot


def angles_from_beta(slot_or_beta, convention: str = "canonical", **kw) -> SlotSpec:
    """Fill the rotation angles of a slot from its phases.

    Accepts a SlotSpec (its realized phases are re-targeted) or a plain
    sequence of phases; extra keywords go to ``SlotSpec.from_beta``.
    """
    if isinstance(slot_or_beta, SlotSpec):
        s = slot_or_beta
        kw = {"gamma": s.gamma, "sign": s.sign, "variant": s.variant, **kw}
        return SlotSpec.from_beta(s.beta, convention=convention, **kw)
    return SlotSpec.from_beta(slot_or_beta, convention=convention, **kw)
