"""Target Fourier series and the sampling front end."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

FORMAT_VERSION = 1


@dataclass(frozen=True)
class FourierSeries:
    """F(x) = sum_n a_n cos(2 pi n x / T + b_n), harmonics n >= 1."""

    terms: tuple
    period: float = math.pi

    def __post_init__(self):
        try:
            terms = tuple(sorted((int(n), float(a), float(b)) for n, a, b in self.terms))
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"bad series terms: {exc}") from exc
        if not terms:
            raise ValidationError("series has no terms")
        ns = [t[0] for t in terms]
        if len(set(ns)) != len(ns):
            raise ValidationError("harmonic indices must be distinct")
        if ns[0] < 1:
            raise ValidationError("harmonic indices start at 1")
        if not all(math.isfinite(a) and math.isfinite(b) for _, a, b in terms):
            raise ValidationError("series contains non-finite coefficients")
        period = float(self.period)
        if not (math.isfinite(period) and period > 0):
            raise ValidationError("period must be positive and finite")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "period", period)

    @property
    def N(self) -> int:
        return self.terms[-1][0]

    def complex_coefficients(self) -> np.ndarray:
        """z[n] = a_n exp(i b_n), index 0 unused."""
        z = np.zeros(self.N + 1, dtype=complex)
        for n, a, b in self.terms:
            z[n] = a * np.exp(1j * b)
        return z

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        w = 2 * np.pi / self.period
        out = np.zeros_like(x)
        for n, a, b in self.terms:
            out = out + a * np.cos(w * n * x + b)
        return out if out.ndim else float(out)

    def scaled(self, s: float) -> "FourierSeries":
        return FourierSeries(tuple((n, s * a, b) for n, a, b in self.terms), self.period)

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "period": self.period,
            "terms": [{"n": n, "a": a, "b": b} for n, a, b in self.terms],
        }

    @classmethod
    def from_dict(cls, d) -> "FourierSeries":
        if not isinstance(d, dict):
            raise ValidationError("series record must be a JSON object")
        ver = d.get("format_version", FORMAT_VERSION)
        if ver != FORMAT_VERSION:
            raise ValidationError(f"unsupported series format_version {ver}")
        try:
            terms = [(t["n"], t["a"], t["b"]) for t in d["terms"]]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad series record: {exc}") from exc
        return cls(tuple(terms), d.get("period", math.pi))


def square_wave_series(N: int = 7) -> FourierSeries:
    """sum over odd n <= N of (1/n) cos(2 n x - pi/2)."""
    return FourierSeries(tuple((n, 1.0 / n, -math.pi / 2) for n in range(1, N + 1, 2)))


def _sampler(f, x1, x2):
    if callable(f):
        return lambda u: np.asarray(f(u), dtype=float) * np.ones_like(u)
    xs, ys = (np.asarray(v, dtype=float) for v in f)
    if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 2:
        raise ValidationError("sample table must be two equal-length 1-D arrays")
    order = np.argsort(xs)
    xs, ys = xs[order], ys[order]
    if xs[0] > x1 + 1e-12 or xs[-1] < x2 - 1e-12:
        raise ValidationError("sample table does not cover [x1, x2]")
    return lambda u: np.interp(u, xs, ys)


def fourier_from_samples(f, x1: float, x2: float, N: int, *, points: int = 4096,
                         extension: str = "even", canonical: bool = True,
                         return_mean: bool = False):
    """Fourier coefficients of f on [x1, x2] up to harmonic N.

    ``extension="even"`` mirrors f about x2, giving period T = 2 (x2 - x1);
    ``"periodic"`` treats [x1, x2) as one full period.  The coefficients
    come from a rectangle rule on ``points`` samples of one period, which
    is the composite trapezoid rule for periodic integrands.  With
    ``canonical`` the result is expressed in x' = pi x / T (period pi),
    otherwise it keeps period T.  The mean value is not part of the series;
    ``return_mean`` returns it alongside as ``(series, mean)``.
    """
    if not (math.isfinite(x1) and math.isfinite(x2) and x2 > x1):
        raise ValidationError("need finite x2 > x1")
    if int(N) < 1:
        raise ValidationError("N must be >= 1")
    if points < 4 * N:
        raise ValidationError("too few quadrature points")
    sample = _sampler(f, x1, x2)
    if extension == "even":
        T = 2.0 * (x2 - x1)
        u = x1 + T * np.arange(points) / points
        src = np.where(u <= x2, u, 2.0 * x2 - u)
    elif extension == "periodic":
        T = x2 - x1
        u = x1 + T * np.arange(points) / points
        src = u
    else:
        raise ValidationError(f"unknown extension {extension!r}")
    vals = sample(src)
    if not np.all(np.isfinite(vals)):
        raise ValidationError("non-finite samples")
    terms = []
    for n in range(1, int(N) + 1):
        ang = 2 * np.pi * n * u / T
        c = 2.0 * np.mean(vals * np.cos(ang))
        s = 2.0 * np.mean(vals * np.sin(ang))
        terms.append((n, math.hypot(s, c), -math.atan2(s, c)))
    series = FourierSeries(tuple(terms), math.pi if canonical else T)
    return (series, float(np.mean(vals))) if return_mean else series
