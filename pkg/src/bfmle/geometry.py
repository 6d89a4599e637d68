"""Geometry of the one-root/three-root regions in the (gamma, delta)-plane.

The cubic discriminant of the likelihood equation factors as
``var_y**3 * D(gamma_hat, delta_hat, r)``, so the sign of the reduced
polynomial ``D`` alone decides uni- versus multimodality.  This module
evaluates ``D`` and its gradient, locates the four cusps of the boundary
curve ``{D = 0}``, traces the curve, classifies points, and maps each point
to its large-sample probability of three real roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cubics import DEFAULT_TOL_DEGENERATE, Cubic, solve_cubic
from .errors import DomainError

__all__ = [
    "Region",
    "LimitCase",
    "RegionPoint",
    "CuspSet",
    "AsymptoticPrediction",
    "reduced_discriminant",
    "reduced_discriminant_gradient",
    "cusps",
    "asymptote_slope",
    "delta_squared_cubic",
    "curve_delta_at",
    "trace_curve",
    "classify_point",
    "asymptotic_prediction",
    "cusp_tangent_ray",
    "DEFAULT_BOUNDARY_TOL",
    "DEFAULT_GRADIENT_TOL",
]

DEFAULT_BOUNDARY_TOL = 1e-9
DEFAULT_GRADIENT_TOL = 1e-6
_CUSP_COORD_TOL = 1e-6


class Region(Enum):
    ONE_ROOT = "OneRoot"
    THREE_ROOTS = "ThreeRoots"
    BOUNDARY_NONSINGULAR = "BoundaryNonsingular"
    BOUNDARY_CUSP = "BoundaryCusp"


class LimitCase(Enum):
    INTERIOR_ONE = "InteriorOne"
    INTERIOR_THREE = "InteriorThree"
    CURVE_NONSINGULAR = "CurveNonsingular"
    CURVE_CUSP = "CurveCusp"


@dataclass(frozen=True)
class RegionPoint:
    gamma: float
    delta: float
    r: float
    d_value: float
    region: Region


@dataclass(frozen=True)
class CuspSet:
    """The four singular points (+-gamma_c, +-delta_c) of the boundary curve."""

    r: float
    gamma: float
    delta: float

    @property
    def points(self) -> tuple[tuple[float, float], ...]:
        g, d = self.gamma, self.delta
        return ((g, d), (g, -d), (-g, d), (-g, -d))


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Large-sample limit of P(three real roots) at a population point."""

    limit_prob_three_roots: float
    case: LimitCase


def _coef_groups(r):
    """The five r-dependent coefficient groups of the reduced discriminant."""
    a = 2.0 + 2.0 * r - r * r
    b = 2.0 * r ** 3 + 2.0 * r ** 4 - r * r
    c = 8.0 + 8.0 * r - r * r
    e = 8.0 * r ** 4 + 8.0 * r ** 3 - r * r
    f = 10.0 * r + 19.0 * r * r + 10.0 * r ** 3
    return a, b, c, e, f


def _reduced_discriminant(gamma, delta, r):
    """Polynomial kernel; accepts floats or numpy arrays."""
    a, b, c, e, f = _coef_groups(r)
    g2 = gamma * gamma
    d2 = delta * delta
    return (
        d2 ** 3 * r * r
        - 2.0 * d2 * d2 * (g2 * a + b)
        - d2 * (g2 * g2 * c + e - 2.0 * g2 * f)
        - 4.0 * (1.0 + r) * (r + g2) ** 3
    )


def _require_domain(gamma: float, r: float) -> None:
    if not (gamma > 0.0):
        raise DomainError(f"gamma must be positive, got {gamma}")
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")


def reduced_discriminant(gamma: float, delta: float, r: float) -> float:
    """Value of the region polynomial D at (gamma, delta) for size ratio r.

    Negative means a unique stationary mean, positive means three.
    """
    _require_domain(gamma, r)
    return float(_reduced_discriminant(gamma, delta, r))


def reduced_discriminant_gradient(gamma: float, delta: float, r: float) -> tuple[float, float]:
    """Analytic partials (dD/dgamma, dD/ddelta) of the region polynomial."""
    _require_domain(gamma, r)
    a, b, c, e, f = _coef_groups(r)
    g2 = gamma * gamma
    d2 = delta * delta
    dgamma = (
        -4.0 * d2 * d2 * gamma * a
        - 4.0 * d2 * gamma * (g2 * c - f)
        - 24.0 * gamma * (1.0 + r) * (r + g2) ** 2
    )
    ddelta = (
        6.0 * d2 * d2 * delta * r * r
        - 8.0 * d2 * delta * (g2 * a + b)
        - 2.0 * delta * (g2 * g2 * c + e - 2.0 * g2 * f)
    )
    return (float(dgamma), float(ddelta))


def cusps(r: float) -> CuspSet:
    """Coordinates of the four cusps of the boundary curve for size ratio r."""
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")
    denom = (r + 2.0) ** 2
    gamma_c = (2.0 * r + 1.0) * math.sqrt((r + 2.0) * r * (2.0 * r + 1.0)) / denom
    delta_c = 3.0 * (1.0 + r) * math.sqrt(3.0 * (r + 2.0) * r) / denom
    return CuspSet(r=r, gamma=gamma_c, delta=delta_c)


def asymptote_slope(r: float) -> float:
    """|delta/gamma| slope of the two asymptotes of the boundary curve."""
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")
    return 2.0 * math.sqrt(1.0 + r) / r


def delta_squared_cubic(gamma: float, r: float) -> Cubic:
    """The region polynomial as a cubic in u = delta**2 (leading coeff r**2)."""
    _require_domain(gamma, r)
    a, b, c, e, f = _coef_groups(r)
    g2 = gamma * gamma
    return Cubic(
        a3=r * r,
        a2=-2.0 * (g2 * a + b),
        a1=-(g2 * g2 * c + e - 2.0 * g2 * f),
        a0=-4.0 * (1.0 + r) * (r + g2) ** 3,
    )


def curve_delta_at(
    gamma: float, r: float, tol_degenerate: float = DEFAULT_TOL_DEGENERATE
) -> tuple[float, ...]:
    """All delta >= 0 with D(gamma, delta, r) = 0, ascending (1 to 3 values).

    Solved in u = delta**2; negative u-roots are discarded.  At least one
    positive root always exists because D(gamma, 0, r) < 0 while D grows
    like r**2 * delta**6.
    """
    roots = solve_cubic(delta_squared_cubic(gamma, r), tol_degenerate).roots
    return tuple(math.sqrt(u) for u in roots if u > 0.0)


def trace_curve(
    r: float, gamma_min: float, gamma_max: float, steps: int
) -> list[tuple[float, float]]:
    """Boundary points (gamma, +-delta) over a uniform gamma grid, for plotting."""
    if not (0.0 < gamma_min < gamma_max):
        raise DomainError("need 0 < gamma_min < gamma_max")
    if steps < 2:
        raise DomainError("steps must be >= 2")
    points: list[tuple[float, float]] = []
    width = gamma_max - gamma_min
    for i in range(steps):
        gamma = gamma_min + width * i / (steps - 1)
        for delta in curve_delta_at(gamma, r):
            points.append((gamma, delta))
            points.append((gamma, -delta))
    return points


def _scale6(gamma: float, delta: float, r: float) -> float:
    # D has total degree 6; tolerances scale with the 6th power of the
    # largest coordinate magnitude.
    return max(1.0, gamma, abs(delta), r) ** 6


def classify_point(
    gamma: float,
    delta: float,
    r: float,
    tol: float = DEFAULT_BOUNDARY_TOL,
    grad_tol: float = DEFAULT_GRADIENT_TOL,
) -> RegionPoint:
    """Classify (gamma, delta) by the sign of D within scale-aware bands.

    Points inside the boundary band are split into cusp versus non-singular
    by gradient norm together with proximity to the cusp coordinates.
    """
    _require_domain(gamma, r)
    d_value = reduced_discriminant(gamma, delta, r)
    scale = _scale6(gamma, delta, r)
    tau = tol * scale
    if d_value < -tau:
        region = Region.ONE_ROOT
    elif d_value > tau:
        region = Region.THREE_ROOTS
    else:
        cs = cusps(r)
        coord_tol = _CUSP_COORD_TOL * max(1.0, cs.gamma, cs.delta)
        near_cusp = (
            abs(gamma - cs.gamma) <= coord_tol
            and abs(abs(delta) - cs.delta) <= coord_tol
        )
        gx, gy = reduced_discriminant_gradient(gamma, delta, r)
        grad_small = math.hypot(gx, gy) <= grad_tol * scale
        region = Region.BOUNDARY_CUSP if (near_cusp and grad_small) else Region.BOUNDARY_NONSINGULAR
    return RegionPoint(gamma=gamma, delta=delta, r=r, d_value=d_value, region=region)


_LIMITS = {
    Region.ONE_ROOT: (0.0, LimitCase.INTERIOR_ONE),
    Region.THREE_ROOTS: (1.0, LimitCase.INTERIOR_THREE),
    Region.BOUNDARY_NONSINGULAR: (0.5, LimitCase.CURVE_NONSINGULAR),
    Region.BOUNDARY_CUSP: (0.0, LimitCase.CURVE_CUSP),
}


def asymptotic_prediction(
    gamma: float,
    delta: float,
    r: float,
    tol: float = DEFAULT_BOUNDARY_TOL,
    grad_tol: float = DEFAULT_GRADIENT_TOL,
) -> AsymptoticPrediction:
    """Large-sample limit of P(three roots) when the truth is (gamma, delta).

    Interior points give 0 or 1, non-singular boundary points 1/2, and the
    cusps 0.
    """
    point = classify_point(gamma, delta, r, tol=tol, grad_tol=grad_tol)
    limit, case = _LIMITS[point.region]
    return AsymptoticPrediction(limit_prob_three_roots=limit, case=case)


def cusp_tangent_ray(r: float) -> tuple[float, float]:
    """Unit direction of the tangent half-ray at the cusp with gamma, delta > 0.

    Proportional to (r - 1, sqrt(3 * (2r + 1))); vertical for r = 1, positive
    slope for r > 1, negative for r < 1.
    """
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")
    gx = r - 1.0
    gy = math.sqrt(3.0 * (2.0 * r + 1.0))
    norm = math.hypot(gx, gy)
    return (gx / norm, gy / norm)
