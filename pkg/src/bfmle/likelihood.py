"""Common-mean likelihood layer: the cubic stationarity equation, profile
variances, stationary-point enumeration, null and unrestricted fits, and the
likelihood-ratio statistic.

Setting the three partial derivatives of the null log-likelihood to zero
reduces to one cubic in the common mean; its one or three real roots are the
candidate estimates.  With three roots the outer two are local maxima and
the middle one is a saddle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cubics import DEFAULT_TOL_DEGENERATE, Cubic, RootSet, solve_cubic
from .errors import DomainError
from .summaries import SummaryStats

__all__ = [
    "NullParams",
    "StationaryKind",
    "StationaryPoint",
    "NullFit",
    "AltFit",
    "cubic_coefficients",
    "profile_variances",
    "loglik",
    "stationary_points",
    "fit_null",
    "fit_alternative",
    "lrt_statistic",
]

_LOG_2PI = math.log(2.0 * math.pi)
# Two stationary log-likelihoods within this relative distance are treated as
# tied; the tie is broken toward the smaller mean.
_TIE_REL_TOL = 1e-12


@dataclass(frozen=True)
class NullParams:
    """Parameters (mu, var_x, var_y) of the common-mean model."""

    mu: float
    var_x: float
    var_y: float

    def __post_init__(self) -> None:
        if self.var_x <= 0 or self.var_y <= 0:
            raise DomainError("variances must be positive")


class StationaryKind(Enum):
    LOCAL_MAX = "LocalMax"
    SADDLE = "Saddle"


@dataclass(frozen=True)
class StationaryPoint:
    """A solution of the likelihood equations with its log-likelihood."""

    params: NullParams
    loglik: float
    kind: StationaryKind


@dataclass(frozen=True)
class NullFit:
    """Null-model fit: the global MLE among all stationary points.

    ``degenerate`` warns that the discriminant fell inside the numeric zero
    band, in which case repeated roots were merged.
    """

    mle: StationaryPoint
    all_points: tuple[StationaryPoint, ...]
    multimodal: bool
    discriminant: float
    degenerate: bool


@dataclass(frozen=True)
class AltFit:
    """Closed-form unrestricted (separate-means) fit."""

    mu_x: float
    mu_y: float
    var_x: float
    var_y: float
    loglik: float


def _cubic_terms(r, mean_x, mean_y, var_x, var_y):
    """Coefficient kernel of the stationarity cubic; float or array inputs."""
    a3 = 1.0 + r
    a2 = -(2.0 * mean_x + mean_y) - r * (2.0 * mean_y + mean_x)
    a1 = (
        mean_x * mean_x
        + 2.0 * (1.0 + r) * mean_x * mean_y
        + r * mean_y * mean_y
        + var_x
        + r * var_y
    )
    a0 = (
        -mean_x * mean_x * mean_y
        - r * mean_y * mean_y * mean_x
        - var_x * mean_y
        - r * var_y * mean_x
    )
    return a3, a2, a1, a0


def cubic_coefficients(s: SummaryStats) -> Cubic:
    """The cubic whose real roots are the stationary values of the common mean."""
    r = s.n / s.m
    a3, a2, a1, a0 = _cubic_terms(r, s.mean_x, s.mean_y, s.var_x, s.var_y)
    return Cubic(a3=a3, a2=a2, a1=a1, a0=a0)


def profile_variances(s: SummaryStats, mu: float) -> tuple[float, float]:
    """Variance maximizers for a fixed common mean mu."""
    return (
        (s.mean_x - mu) ** 2 + s.var_x,
        (s.mean_y - mu) ** 2 + s.var_y,
    )


def loglik(s: SummaryStats, p: NullParams) -> float:
    """Null-model log-likelihood at (mu, var_x, var_y)."""
    return (
        -(s.n + s.m) / 2.0 * _LOG_2PI
        - s.n / 2.0 * math.log(p.var_x)
        - s.m / 2.0 * math.log(p.var_y)
        - s.n / 2.0 * ((s.var_x + (s.mean_x - p.mu) ** 2) / p.var_x)
        - s.m / 2.0 * ((s.var_y + (s.mean_y - p.mu) ** 2) / p.var_y)
    )


def _point_at(s: SummaryStats, mu: float, kind: StationaryKind) -> StationaryPoint:
    var_x, var_y = profile_variances(s, mu)
    params = NullParams(mu=mu, var_x=var_x, var_y=var_y)
    return StationaryPoint(params=params, loglik=loglik(s, params), kind=kind)


def _points_from_roots(s: SummaryStats, roots: RootSet) -> tuple[StationaryPoint, ...]:
    mus = roots.roots
    if len(mus) == 3:
        kinds = (StationaryKind.LOCAL_MAX, StationaryKind.SADDLE, StationaryKind.LOCAL_MAX)
        return tuple(_point_at(s, mu, k) for mu, k in zip(mus, kinds))
    if len(mus) == 1:
        return (_point_at(s, mus[0], StationaryKind.LOCAL_MAX),)
    # Merged double + simple root: the simple root carries the strictly
    # higher log-likelihood and is the only local maximum.
    pts = [_point_at(s, mu, StationaryKind.SADDLE) for mu in mus]
    top = max(range(len(pts)), key=lambda i: pts[i].loglik)
    pts[top] = StationaryPoint(pts[top].params, pts[top].loglik, StationaryKind.LOCAL_MAX)
    return tuple(pts)


def stationary_points(
    s: SummaryStats, tol_degenerate: float = DEFAULT_TOL_DEGENERATE
) -> tuple[StationaryPoint, ...]:
    """All solutions of the likelihood equations, ascending in mu."""
    roots = solve_cubic(cubic_coefficients(s), tol_degenerate)
    return _points_from_roots(s, roots)


def _select_mle(points: tuple[StationaryPoint, ...]) -> StationaryPoint:
    best = max(p.loglik for p in points)
    tol = _TIE_REL_TOL * (1.0 + abs(best))
    # Among (near-)ties, deterministically pick the smallest mean.
    return min((p for p in points if best - p.loglik <= tol), key=lambda p: p.params.mu)


def fit_null(s: SummaryStats, tol_degenerate: float = DEFAULT_TOL_DEGENERATE) -> NullFit:
    """Maximum-likelihood fit of the common-mean model."""
    roots = solve_cubic(cubic_coefficients(s), tol_degenerate)
    points = _points_from_roots(s, roots)
    return NullFit(
        mle=_select_mle(points),
        all_points=points,
        multimodal=len(points) == 3,
        discriminant=roots.discriminant,
        degenerate=roots.degenerate,
    )


def fit_alternative(s: SummaryStats) -> AltFit:
    """Closed-form MLE of the unrestricted two-sample normal model."""
    ll = (
        -(s.n + s.m) / 2.0 * _LOG_2PI
        - s.n / 2.0 * math.log(s.var_x)
        - s.m / 2.0 * math.log(s.var_y)
        - (s.n + s.m) / 2.0
    )
    return AltFit(mu_x=s.mean_x, mu_y=s.mean_y, var_x=s.var_x, var_y=s.var_y, loglik=ll)


def lrt_statistic(s: SummaryStats, tol_degenerate: float = DEFAULT_TOL_DEGENERATE) -> float:
    """Likelihood-ratio statistic 2 * (loglik_alt - loglik_null), >= 0."""
    stat = 2.0 * (fit_alternative(s).loglik - fit_null(s, tol_degenerate).mle.loglik)
    return max(0.0, stat)
