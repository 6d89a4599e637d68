"""Reproducible Monte Carlo estimation of the probability that the
likelihood equations have three distinct real solutions.

Replicate ``j`` of grid point ``g`` draws its dataset from the counter-based
stream ``(seed, g, j)`` (see :mod:`bfmle.rng`): the first ``n`` normals form
the X sample, the next ``m`` the Y sample.  Replicates are therefore
independent of how work is partitioned, and results are bit-identical for
any worker count.  Replicates whose discriminant falls inside the numeric
zero band (or whose sampled variance is exactly zero) are tallied as
degenerate and excluded from the estimate.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import rng
from .cubics import DEFAULT_TOL_DEGENERATE, _discriminant_terms
from .errors import DomainError
from .likelihood import _cubic_terms

__all__ = ["SimConfig", "SimResult", "SweepPoint", "replicate_dataset",
           "estimate_prob_three", "sweep_delta"]

# Keep per-batch draw matrices around 16 MB.
_BATCH_VALUES = 2_000_000
_MAX_BATCH_REPS = 65536


@dataclass(frozen=True)
class SimConfig:
    """Sampling model, replication count, seed, and worker count."""

    n: int
    m: int
    mu_x: float
    mu_y: float
    var_x: float
    var_y: float
    replications: int
    seed: int
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise DomainError(f"sample sizes must be >= 2, got n={self.n}, m={self.m}")
        if self.var_x <= 0 or self.var_y <= 0:
            raise DomainError("variances must be positive")
        if not (math.isfinite(self.mu_x) and math.isfinite(self.mu_y)):
            raise DomainError("means must be finite")
        if self.replications < 1:
            raise DomainError("replications must be >= 1")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SimResult:
    """Tally of three-root replicates among the non-degenerate ones."""

    count_three: int
    replications: int
    p_hat: float
    std_err: float
    degenerate_count: int


@dataclass(frozen=True)
class SweepPoint:
    delta: float
    result: SimResult


def replicate_dataset(
    cfg: SimConfig, rep_index: int, grid_index: int = 0
) -> tuple[np.ndarray, np.ndarray]:
    """The exact (xs, ys) dataset of one replicate, per the stream contract."""
    z = rng.standard_normals(
        cfg.seed, grid_index, np.array([rep_index], dtype=np.uint64), cfg.n + cfg.m
    )[0]
    xs = cfg.mu_x + math.sqrt(cfg.var_x) * z[: cfg.n]
    ys = cfg.mu_y + math.sqrt(cfg.var_y) * z[cfg.n :]
    return xs, ys


def _tally_batch(
    cfg: SimConfig, grid_index: int, start: int, stop: int, tol_degenerate: float
) -> tuple[int, int]:
    """Count (three-root, degenerate) replicates for indices [start, stop)."""
    k = cfg.n + cfg.m
    sx = math.sqrt(cfg.var_x)
    sy = math.sqrt(cfg.var_y)
    r = cfg.n / cfg.m
    three = 0
    degenerate = 0
    batch = max(1, min(_MAX_BATCH_REPS, _BATCH_VALUES // k))
    for lo in range(start, stop, batch):
        hi = min(lo + batch, stop)
        reps = np.arange(lo, hi, dtype=np.uint64)
        z = rng.standard_normals(cfg.seed, grid_index, reps, k)
        xs = cfg.mu_x + sx * z[:, : cfg.n]
        ys = cfg.mu_y + sy * z[:, cfg.n :]
        mean_x = xs.mean(axis=1)
        mean_y = ys.mean(axis=1)
        var_x = xs.var(axis=1)
        var_y = ys.var(axis=1)

        a3, a2, a1, a0 = _cubic_terms(r, mean_x, mean_y, var_x, var_y)
        disc = _discriminant_terms(a3, a2, a1, a0)
        scale = np.maximum(
            np.maximum(np.abs(a2), np.abs(a1)), np.maximum(np.abs(a0), abs(a3))
        )
        tau = tol_degenerate * scale ** 4
        deg_mask = (var_x <= 0.0) | (var_y <= 0.0) | (np.abs(disc) <= tau)
        three += int(((disc > tau) & ~deg_mask).sum())
        degenerate += int(deg_mask.sum())
    return three, degenerate


def _tally_span(args: tuple[SimConfig, int, int, int, float]) -> tuple[int, int]:
    return _tally_batch(*args)


def _spans(total: int, parts: int) -> list[tuple[int, int]]:
    parts = min(parts, total)
    base, extra = divmod(total, parts)
    spans = []
    start = 0
    for i in range(parts):
        stop = start + base + (1 if i < extra else 0)
        spans.append((start, stop))
        start = stop
    return spans


def estimate_prob_three(
    cfg: SimConfig, grid_index: int = 0, tol_degenerate: float = DEFAULT_TOL_DEGENERATE
) -> SimResult:
    """Monte Carlo estimate of P(three distinct real solutions).

    Deterministic in (seed, grid_index, replications, model) regardless of
    ``cfg.workers``: tallies are integer sums over disjoint replicate spans.
    """
    if cfg.workers == 1 or cfg.replications < 2 * cfg.workers:
        three, degenerate = _tally_batch(cfg, grid_index, 0, cfg.replications, tol_degenerate)
    else:
        jobs = [
            (cfg, grid_index, start, stop, tol_degenerate)
            for start, stop in _spans(cfg.replications, cfg.workers)
        ]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            tallies = list(pool.map(_tally_span, jobs))
        three = sum(t for t, _ in tallies)
        degenerate = sum(d for _, d in tallies)

    valid = cfg.replications - degenerate
    p_hat = three / valid if valid > 0 else 0.0
    std_err = math.sqrt(p_hat * (1.0 - p_hat) / valid) if valid > 0 else 0.0
    return SimResult(
        count_three=three,
        replications=cfg.replications,
        p_hat=p_hat,
        std_err=std_err,
        degenerate_count=degenerate,
    )


def sweep_delta(
    base: SimConfig,
    deltas: list[float],
    tol_degenerate: float = DEFAULT_TOL_DEGENERATE,
) -> list[SweepPoint]:
    """One estimate per delta, with mu_x = delta and mu_y = 0.

    Grid point ``j`` uses streams (seed, j, replicate), so adding or
    reordering grid points never changes any single point's estimate.
    """
    points = []
    for j, delta in enumerate(deltas):
        cfg = replace(base, mu_x=float(delta), mu_y=0.0)
        points.append(SweepPoint(delta=float(delta),
                                 result=estimate_prob_three(cfg, grid_index=j,
                                                            tol_degenerate=tol_degenerate)))
    return points
