"""Sufficient statistics for the two-sample common-mean normal model.

Variances follow the maximum-likelihood convention (divisor ``n``, not
``n - 1``).  Everything downstream of this module consumes either
:class:`SummaryStats` or the reduced ratios :class:`ReducedStats`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateVariance, DomainError, LengthError

__all__ = ["SummaryStats", "ReducedStats", "summarize", "reduce_stats"]


@dataclass(frozen=True)
class SummaryStats:
    """Sample sizes, means, and divisor-n empirical variances of two samples."""

    n: int
    m: int
    mean_x: float
    mean_y: float
    var_x: float
    var_y: float

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise DomainError(f"both sample sizes must be >= 2, got n={self.n}, m={self.m}")
        for name in ("mean_x", "mean_y", "var_x", "var_y"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.var_x <= 0 or self.var_y <= 0:
            raise DomainError(
                f"variances must be positive, got var_x={self.var_x}, var_y={self.var_y}"
            )


@dataclass(frozen=True)
class ReducedStats:
    """The ratios that determine the modality of the fitted likelihood.

    ``r`` is the sample-size ratio n/m, ``gamma_hat`` the ratio of empirical
    standard deviations, and ``delta_hat`` the mean difference scaled by the
    second sample's standard deviation.
    """

    r: float
    gamma_hat: float
    delta_hat: float

    def __post_init__(self) -> None:
        if not (self.r > 0 and self.gamma_hat > 0):
            raise DomainError("r and gamma_hat must be positive")


def summarize(xs: Sequence[float] | np.ndarray, ys: Sequence[float] | np.ndarray) -> SummaryStats:
    """Build :class:`SummaryStats` from two raw samples.

    Means and variances are computed with a two-pass algorithm; the variance
    uses divisor ``len(sample)``.

    Raises
    ------
    LengthError
        If either sample has fewer than two observations.
    DegenerateVariance
        If either sample is constant.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise DomainError("samples must be one-dimensional")
    if x.size < 2:
        raise LengthError(f"first sample needs >= 2 observations, got {x.size}")
    if y.size < 2:
        raise LengthError(f"second sample needs >= 2 observations, got {y.size}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise DomainError("samples must contain only finite values")

    mean_x = float(x.mean())
    mean_y = float(y.mean())
    var_x = float(np.square(x - mean_x).mean())
    var_y = float(np.square(y - mean_y).mean())
    if var_x == 0.0:
        raise DegenerateVariance("first sample is constant (zero empirical variance)")
    if var_y == 0.0:
        raise DegenerateVariance("second sample is constant (zero empirical variance)")
    return SummaryStats(n=int(x.size), m=int(y.size), mean_x=mean_x, mean_y=mean_y,
                        var_x=var_x, var_y=var_y)


def reduce_stats(s: SummaryStats) -> ReducedStats:
    """Reduce summary statistics to the ratios (r, gamma_hat, delta_hat)."""
    sd_y = math.sqrt(s.var_y)
    return ReducedStats(
        r=s.n / s.m,
        gamma_hat=math.sqrt(s.var_x) / sd_y,
        delta_hat=(s.mean_x - s.mean_y) / sd_y,
    )
