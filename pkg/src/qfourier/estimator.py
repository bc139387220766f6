"""scikit-learn style wrapper: fit a curve, encode it, read it back.

``fit`` takes samples (x, y) of a 1-D function, extracts its Fourier
series on the sampled interval, compiles and assembles the circuit.
``transform`` returns the readout probability P(q_N = 1) at new x and
``predict`` decodes it back to function values, (P - 1/2) / C + mean.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .analysis import simulate_p1
from .compiler import assemble, compile_plan, fourier_from_samples
from .errors import ValidationError
from .oracle import eval_plan_probability


def check_abscissa(X) -> np.ndarray:
    """Validate x input: a 1-D array or a single-column 2-D array of floats."""
    X = check_array(X, ensure_2d=False, dtype=float)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValidationError(f"expected one feature column, got {X.shape[1]}")
        X = X[:, 0]
    return X


def check_samples(X, y):
    X, y = check_X_y(np.reshape(np.asarray(X, dtype=float), (-1, 1)), y,
                     dtype=float, y_numeric=True)
    if X.shape[0] < 4:
        raise ValidationError("need at least 4 samples")
    if np.ptp(X[:, 0]) <= 0:
        raise ValidationError("samples must span a non-empty interval")
    return X[:, 0], y


class FourierCircuitRegressor(RegressorMixin, TransformerMixin, BaseEstimator):
    """Encode a sampled function as a Fourier-series circuit.

    Parameters
    ----------
    n_harmonics : highest harmonic kept.
    extension : "even" mirrors the samples about the right end, "periodic"
        treats the sampled interval as one period.
    c : pin the scaling constant; None uses the largest feasible value.
    points : quadrature points for the coefficient integrals.
    simulate : use the statevector for outputs (True) or the analytic
        probability of the plan (False).
    """

    def __init__(self, n_harmonics=7, extension="even", c=None, points=4096, simulate=True):
        self.n_harmonics = n_harmonics
        self.extension = extension
        self.c = c
        self.points = points
        self.simulate = simulate

    def fit(self, X, y):
        x, y = check_samples(X, y)
        self.n_features_in_ = 1
        self.x_range_ = (float(x.min()), float(x.max()))
        self.series_, self.intercept_ = fourier_from_samples(
            (x, y), *self.x_range_, int(self.n_harmonics), points=int(self.points),
            extension=self.extension, canonical=False, return_mean=True)
        self.plan_ = compile_plan(self.series_, c=self.c)
        self.circuit_ = assemble(self.plan_)
        return self

    def transform(self, X):
        check_is_fitted(self, "plan_")
        x = check_abscissa(X)
        if self.simulate:
            p = simulate_p1(self.plan_, x, self.circuit_)
        else:
            p = np.asarray(eval_plan_probability(self.plan_, x), dtype=float)
        return p.reshape(-1, 1)

    def predict(self, X):
        p = self.transform(X)[:, 0]
        return (p - 0.5) / self.plan_.C + self.intercept_
