"""Finite-sample upper bound on the null probability of three real
solutions to the likelihood equations.

Under a true common mean, three solutions force the scaled mean difference
past the cusp ordinate c_n of the boundary curve; the bound is the t-tail
probability of that event.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import t_two_sided_tail

__all__ = ["BoundResult", "multimodality_bound", "multimodality_bound_from_ratio"]


@dataclass(frozen=True)
class BoundResult:
    """Cusp ordinate c_n, the derived t threshold, and the tail bound."""

    c_n: float
    t_threshold: float
    bound: float


def multimodality_bound_from_ratio(r: float, m: int, gamma: float) -> BoundResult:
    """Bound for sample-size ratio r, second sample size m, and population
    standard-deviation ratio gamma = sigma_x / sigma_y."""
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if not (gamma > 0.0):
        raise DomainError(f"gamma must be positive, got {gamma}")
    denom = (r + 2.0) ** 2
    c_n = 3.0 * (1.0 + r) * math.sqrt(3.0 * (r + 2.0) * r) / denom
    t_threshold = (
        math.sqrt(m - 1.0)
        * 3.0 * (1.0 + r) * r * math.sqrt(3.0 * (r + 2.0))
        / (denom * math.sqrt(gamma * gamma + r))
    )
    return BoundResult(
        c_n=c_n,
        t_threshold=t_threshold,
        bound=t_two_sided_tail(t_threshold, m - 1.0),
    )


def multimodality_bound(n: int, m: int, gamma: float) -> BoundResult:
    """Bound on P(three real solutions) under a true common mean."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    return multimodality_bound_from_ratio(n / m, m, gamma)
