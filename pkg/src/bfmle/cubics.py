"""Real-cubic machinery: discriminant, root extraction, root-count classes.

The solver works on the depressed form t^3 + p t + q.  Three distinct real
roots are extracted with the trigonometric (arccos) method, the single real
root with Cardano's formula using the larger-magnitude resolvent root so the
cube root never suffers cancellation.  Every root gets one guarded Newton
step against the original coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NotCubic

__all__ = [
    "Cubic",
    "RootSet",
    "RootCount",
    "DEFAULT_TOL_DEGENERATE",
    "discriminant",
    "solve_cubic",
    "count_real_roots",
]

DEFAULT_TOL_DEGENERATE = 1e-12


@dataclass(frozen=True)
class Cubic:
    """Coefficients of a3*x^3 + a2*x^2 + a1*x + a0."""

    a3: float
    a2: float
    a1: float
    a0: float

    def __call__(self, x: float) -> float:
        return ((self.a3 * x + self.a2) * x + self.a1) * x + self.a0

    def derivative(self, x: float) -> float:
        return (3.0 * self.a3 * x + 2.0 * self.a2) * x + self.a1

    def coefficient_scale(self) -> float:
        return max(abs(self.a3), abs(self.a2), abs(self.a1), abs(self.a0))


class RootCount(Enum):
    ONE = "One"
    THREE = "Three"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class RootSet:
    """Distinct real roots in ascending order.

    ``degenerate`` is set when the discriminant is too close to zero to
    classify reliably; repeated roots are then merged, so ``roots`` may hold
    two entries (double + simple root) or one (triple root).
    """

    roots: tuple[float, ...]
    discriminant: float
    degenerate: bool

    def __post_init__(self) -> None:
        if not self.roots:
            raise ValueError("a real cubic always has at least one real root")
        if any(b <= a for a, b in zip(self.roots, self.roots[1:])):
            raise ValueError("roots must be strictly increasing")


def _discriminant_terms(a3, a2, a1, a0):
    """Five-term cubic discriminant; works on floats and numpy arrays alike."""
    return (
        a1 * a1 * a2 * a2
        - 4.0 * a0 * a2 ** 3
        - 4.0 * a1 ** 3 * a3
        + 18.0 * a0 * a1 * a2 * a3
        - 27.0 * a0 * a0 * a3 * a3
    )


def discriminant(c: Cubic) -> float:
    """Discriminant of the cubic; > 0 means three distinct real roots, < 0 one."""
    return float(_discriminant_terms(c.a3, c.a2, c.a1, c.a0))


def _degeneracy_threshold(c: Cubic, tol_degenerate: float) -> float:
    # The discriminant is homogeneous of degree 4 in the coefficients, so a
    # scale-invariant band needs the 4th power of the coefficient magnitude.
    return tol_degenerate * c.coefficient_scale() ** 4


def count_real_roots(c: Cubic, tol_degenerate: float = DEFAULT_TOL_DEGENERATE) -> RootCount:
    """Classify the number of distinct real roots by discriminant sign."""
    if c.a3 == 0.0:
        raise NotCubic("leading coefficient is zero")
    disc = discriminant(c)
    tau = _degeneracy_threshold(c, tol_degenerate)
    if disc > tau:
        return RootCount.THREE
    if disc < -tau:
        return RootCount.ONE
    return RootCount.DEGENERATE


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _newton_polish(c: Cubic, x: float) -> float:
    # One Newton step against the original coefficients, kept only if it
    # actually reduces the residual.
    fx = c(x)
    dfx = c.derivative(x)
    if dfx == 0.0 or not math.isfinite(dfx):
        return x
    x_new = x - fx / dfx
    if math.isfinite(x_new) and abs(c(x_new)) <= abs(fx):
        return x_new
    return x


def solve_cubic(c: Cubic, tol_degenerate: float = DEFAULT_TOL_DEGENERATE) -> RootSet:
    """All distinct real roots of ``c``, sorted ascending.

    The root count agrees with the discriminant sign whenever the
    discriminant clears the degeneracy band; inside the band the
    ``degenerate`` flag is set and repeated roots are merged.
    """
    if c.a3 == 0.0:
        raise NotCubic("leading coefficient is zero")

    disc = discriminant(c)
    tau = _degeneracy_threshold(c, tol_degenerate)

    # Depressed form: x = t + shift turns c into t^3 + p t + q (monic).
    b2 = c.a2 / c.a3
    b1 = c.a1 / c.a3
    b0 = c.a0 / c.a3
    shift = -b2 / 3.0
    p = b1 - b2 * b2 / 3.0
    q = (2.0 * b2 ** 3 - 9.0 * b2 * b1) / 27.0 + b0

    if disc > tau:
        # Three distinct real roots (p < 0 here): trigonometric method.
        mfac = 2.0 * math.sqrt(-p / 3.0)
        cos_arg = 3.0 * q / (p * mfac)
        cos_arg = min(1.0, max(-1.0, cos_arg))
        theta = math.acos(cos_arg)
        ts = [mfac * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
        roots = sorted(_newton_polish(c, t + shift) for t in ts)
        return RootSet(roots=tuple(roots), discriminant=disc, degenerate=False)

    if disc < -tau:
        # Unique real root: Cardano with the larger-magnitude resolvent root.
        rdisc = math.sqrt(q * q / 4.0 + p ** 3 / 27.0)
        if q >= 0.0:
            u = _cbrt(-q / 2.0 - rdisc)
        else:
            u = _cbrt(-q / 2.0 + rdisc)
        t = u - p / (3.0 * u)
        root = _newton_polish(c, t + shift)
        return RootSet(roots=(root,), discriminant=disc, degenerate=False)

    # Near-zero discriminant: merge repeated roots.  The critical points of
    # the cubic come from the (exact) quadratic derivative.
    dq = b2 * b2 - 3.0 * b1
    if dq <= 0.0:
        # No two distinct critical points: treat as a triple root.
        root = _newton_polish(c, shift)
        return RootSet(roots=(root,), discriminant=disc, degenerate=True)
    sq = math.sqrt(dq)
    crit_lo = (-b2 - sq) / 3.0
    crit_hi = (-b2 + sq) / 3.0
    # The double root is the critical point where the cubic (nearly) vanishes.
    double = crit_lo if abs(c(crit_lo)) <= abs(c(crit_hi)) else crit_hi
    simple = _newton_polish(c, -b2 - 2.0 * double)
    if abs(simple - double) <= 1e-8 * (1.0 + abs(simple) + abs(double)):
        return RootSet(roots=(double,), discriminant=disc, degenerate=True)
    lo, hi = sorted((double, simple))
    return RootSet(roots=(lo, hi), discriminant=disc, degenerate=True)
