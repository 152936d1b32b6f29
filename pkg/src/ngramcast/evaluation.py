"""Synthetic series generators and holdout backtesting with standard error metrics.

Noise reproducibility: perturbations come from a splitmix64 stepper (constants
0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB, shifts 30/27/31)
mapped to uniforms in [-half_width, half_width], so any implementation of those
constants reproduces the same series bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import SeriesTooShort, UndefinedCorrelation
from .forecasting import Forecast, ForecastConfig, HoltConfig, forecast, forecast_holt
from .series import TimeSeries, pearson

SINUSOID = "sinusoid"
SINUSOID_LINEAR = "sinusoid-linear"
SINUSOID_QUADRATIC = "sinusoid-quadratic"

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GeneratorSpec:
    """Seasonal series with optional linear/quadratic trend and seeded uniform noise.

    x_k = amplitude * sin(2*pi*k/period + phase) + slope*k + quadratic*k^2 + u_k
    for k = 1..length, u_k uniform on [-noise, +noise].
    """

    kind: str = SINUSOID
    length: int = 100
    period: float = 25.0
    amplitude: float = 2.0
    slope: float = 0.0
    quadratic: float = 0.0
    phase: float = 0.0
    noise: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in (SINUSOID, SINUSOID_LINEAR, SINUSOID_QUADRATIC):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")
        if self.period <= 0:
            raise ValueError(f"period must be > 0, got {self.period}")
        if self.amplitude <= 0:
            raise ValueError(f"amplitude must be > 0, got {self.amplitude}")
        if self.noise < 0:
            raise ValueError(f"noise half-width must be >= 0, got {self.noise}")
        if self.kind == SINUSOID and (self.slope != 0.0 or self.quadratic != 0.0):
            raise ValueError("slope and quadratic must be 0 for kind 'sinusoid'")
        if self.kind == SINUSOID_LINEAR and self.quadratic != 0.0:
            raise ValueError("quadratic must be 0 for kind 'sinusoid-linear'")


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z = z ^ (z >> 31)
    return state, z


def uniform_noise(half_width: float, count: int, seed: int) -> np.ndarray:
    """count deterministic uniforms on [-half_width, +half_width]."""
    out = np.empty(count, dtype=np.float64)
    state = seed & _MASK64
    for i in range(count):
        state, z = _splitmix64(state)
        out[i] = (2.0 * (z / 2.0**64) - 1.0) * half_width
    return out


def clean_values(spec: GeneratorSpec, positions) -> np.ndarray:
    """Noise-free generator values at the given 1-based positions.

    Useful as the analytic continuation oracle: pass positions beyond length.
    """
    k = np.asarray(positions, dtype=np.float64)
    return (
        spec.amplitude * np.sin(2.0 * math.pi * k / spec.period + spec.phase)
        + spec.slope * k
        + spec.quadratic * k * k
    )


def generate(spec: GeneratorSpec) -> TimeSeries:
    """Deterministic series for the spec; identical spec gives identical bits."""
    values = clean_values(spec, np.arange(1, spec.length + 1))
    if spec.noise > 0.0:
        values = values + uniform_noise(spec.noise, spec.length, spec.seed)
    return TimeSeries(values)


@dataclass(frozen=True)
class BacktestReport:
    mae: float
    rmse: float
    mape: float | None  # percent; None when every actual is 0
    mape_skipped: int  # actuals equal to 0, excluded from MAPE
    correlation: float | None  # None when forecast or actual is constant
    horizon: int
    method: str
    config: object

    def __post_init__(self):
        if self.mae > self.rmse + 1e-12:
            raise ValueError("MAE cannot exceed RMSE")


def error_metrics(predicted, actual) -> tuple[float, float, float | None, int, float | None]:
    """(mae, rmse, mape, mape_skipped, correlation) of two equal-length sequences."""
    f = np.asarray(predicted, dtype=np.float64)
    a = np.asarray(actual, dtype=np.float64)
    if f.size != a.size:
        raise ValueError(f"length mismatch: {f.size} vs {a.size}")
    err = f - a
    mae = float(np.abs(err).mean())
    rmse = float(np.sqrt((err * err).mean()))
    nonzero = a != 0.0
    skipped = int((~nonzero).sum())
    if nonzero.any():
        mape = float((np.abs(err[nonzero] / a[nonzero])).mean() * 100.0)
    else:
        mape = None
    try:
        corr = pearson(f, a)
    except UndefinedCorrelation:
        corr = None
    return mae, rmse, mape, skipped, corr


def holdout_backtest(series: TimeSeries, config, horizon: int) -> tuple[BacktestReport, Forecast]:
    """Hold out the last P values, forecast them from the prefix, score the error.

    config selects the method: a HoltConfig runs the Holt baseline, a
    ForecastConfig runs the phrase method its trend_mode selects. The method
    only ever sees the training prefix.
    """
    values = series.values
    if values.size <= horizon:
        raise SeriesTooShort(values.size, horizon + 1)
    train = TimeSeries(values[: values.size - horizon])
    actual = values[values.size - horizon :]
    if isinstance(config, HoltConfig):
        result = forecast_holt(train, config, horizon)
    else:
        if config.horizon != horizon:
            config = replace(config, horizon=horizon)
        result = forecast(train, config)
    mae, rmse, mape, skipped, corr = error_metrics(result.values, actual)
    report = BacktestReport(
        mae=mae,
        rmse=rmse,
        mape=mape,
        mape_skipped=skipped,
        correlation=corr,
        horizon=horizon,
        method=result.method,
        config=config,
    )
    return report, result
