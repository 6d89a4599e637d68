"""bfmle: exact maximum-likelihood estimation and multimodality diagnostics
for the two-sample common-mean normal model.

The likelihood equations of the common-mean model reduce to a single cubic;
this package solves it exactly, classifies uni- versus multimodality via the
cubic discriminant and its reduced form in the ratio plane, evaluates a
finite-sample bound on the null probability of multimodality, and verifies
the large-sample limits by reproducible Monte Carlo simulation.
"""

from .bound import BoundResult, multimodality_bound, multimodality_bound_from_ratio
from .cubics import Cubic, RootCount, RootSet, count_real_roots, discriminant, solve_cubic
from .errors import BfmleError, DegenerateVariance, DomainError, LengthError, NotCubic
from .geometry import (
    AsymptoticPrediction,
    CuspSet,
    LimitCase,
    Region,
    RegionPoint,
    asymptote_slope,
    asymptotic_prediction,
    classify_point,
    curve_delta_at,
    cusp_tangent_ray,
    cusps,
    reduced_discriminant,
    reduced_discriminant_gradient,
    trace_curve,
)
from .likelihood import (
    AltFit,
    NullFit,
    NullParams,
    StationaryKind,
    StationaryPoint,
    cubic_coefficients,
    fit_alternative,
    fit_null,
    loglik,
    lrt_statistic,
    profile_variances,
    stationary_points,
)
from .montecarlo import SimConfig, SimResult, SweepPoint, estimate_prob_three, sweep_delta
from .special import log_gamma, reg_inc_beta, t_two_sided_tail
from .summaries import ReducedStats, SummaryStats, reduce_stats, summarize

__version__ = "0.1.0"

__all__ = [
    "AltFit",
    "AsymptoticPrediction",
    "BfmleError",
    "BoundResult",
    "Cubic",
    "CuspSet",
    "DegenerateVariance",
    "DomainError",
    "LengthError",
    "LimitCase",
    "NotCubic",
    "NullFit",
    "NullParams",
    "ReducedStats",
    "Region",
    "RegionPoint",
    "RootCount",
    "RootSet",
    "SimConfig",
    "SimResult",
    "StationaryKind",
    "StationaryPoint",
    "SummaryStats",
    "SweepPoint",
    "asymptote_slope",
    "asymptotic_prediction",
    "classify_point",
    "count_real_roots",
    "cubic_coefficients",
    "curve_delta_at",
    "cusp_tangent_ray",
    "cusps",
    "discriminant",
    "estimate_prob_three",
    "fit_alternative",
    "fit_null",
    "log_gamma",
    "loglik",
    "lrt_statistic",
    "multimodality_bound",
    "multimodality_bound_from_ratio",
    "profile_variances",
    "reduce_stats",
    "reduced_discriminant",
    "reduced_discriminant_gradient",
    "reg_inc_beta",
    "solve_cubic",
    "stationary_points",
    "summarize",
    "sweep_delta",
    "t_two_sided_tail",
]
