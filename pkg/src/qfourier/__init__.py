"""Compile truncated Fourier series into qubit circuits and simulate them."""
from .compiler import (CompiledPlan, FourierSeries, assemble, compile_plan,
                       fourier_from_samples, square_wave_series)
from .estimator import FourierCircuitRegressor

__version__ = "0.1.0"

__all__ = ["CompiledPlan", "FourierSeries", "FourierCircuitRegressor", "assemble",
           "compile_plan", "fourier_from_samples", "square_wave_series"]
