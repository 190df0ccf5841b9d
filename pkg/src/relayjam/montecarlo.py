"""Ergodic secrecy rate and secrecy outage sweeps over transmit power.

Trial ``t`` draws its channels from ``trial_rng(master_seed, t)`` and reuses
them at every power point and for every scheme (common random numbers).
Trials are processed in fixed-size chunks; a chunk's output depends only on
its trial indices, so the result is bit-identical for any worker count.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .channel import average_gain_view, draw_power_gains
from .selection import BatchEvaluator, InsufficientNodesError, SchemeId, min_nodes
from .sinr import PowerConfig
from .topology import NetworkTopology

log = logging.getLogger(__name__)

CHUNK_SIZE = 250


def power_grid(start: float = 0.0, stop: float = 50.0, step: float = 2.0) -> np.ndarray:
    """Inclusive dB grid ``start, start+step, ..., stop``."""
    if step <= 0:
        raise ValueError("grid step must be positive")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    if n < 1:
        raise ValueError("empty power grid")
    return np.round(start + step * np.arange(n), 12)


def check_grid(grid) -> np.ndarray:
    g = np.asarray(grid, dtype=float).ravel()
    if g.size == 0:
        raise ValueError("power grid is empty")
    if not np.all(np.isfinite(g)):
        raise ValueError("power grid has non-finite values")
    if np.any(np.diff(g) <= 0):
        raise ValueError("power grid must be strictly increasing")
    return g


@dataclass
class SweepResult:
    scheme: SchemeId
    ps_db: np.ndarray
    ergodic_rate: np.ndarray
    rate_stderr: np.ndarray
    rate_s1: np.ndarray
    rate_s2: np.ndarray
    jamming_fraction: np.ndarray
    trials: int
    outage_prob: Optional[np.ndarray] = None
    target_rate: Optional[float] = None
    samples: Optional[np.ndarray] = None  # (points, trials) sum rates, if kept


def _chunk_rates(args):
    topology, schemes, grid, trial_ids, master_seed, power_ratio, allow_equal, reciprocal = args
    g = draw_power_gains(topology, master_seed, trial_ids, reciprocal)
    avg = average_gain_view(topology)
    S, P, T = len(schemes), len(grid), len(trial_ids)
    r1 = np.empty((S, P, T))
    r2 = np.empty((S, P, T))
    jam = np.empty((S, P, T), dtype=bool)
    for p, ps_db in enumerate(grid):
        ev = BatchEvaluator(g, avg, PowerConfig.from_db(ps_db, power_ratio), allow_equal)
        for s, scheme in enumerate(schemes):
            out = ev.select(scheme)
            r1[s, p], r2[s, p], jam[s, p] = out.rate_s1, out.rate_s2, out.jamming_active
    return r1, r2, jam


def sweep(
    schemes: Sequence,
    topology: NetworkTopology,
    grid,
    trials: int,
    master_seed: int,
    *,
    power_ratio: float = 10.0,
    target_rate: Optional[float] = None,
    allow_equal_jammers: bool = True,
    reciprocal: bool = True,
    workers: int = 1,
    keep_samples: bool = False,
    chunk_size: int = CHUNK_SIZE,
) -> dict:
    """Evaluate several schemes on shared channel draws; returns ``{SchemeId: SweepResult}``."""
    schemes = [SchemeId.parse(s) for s in schemes]
    if not schemes:
        raise ValueError("no schemes requested")
    grid = check_grid(grid)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if target_rate is not None and not target_rate >= 0:
        raise ValueError("target rate must be nonnegative")
    for s in schemes:
        if topology.K < min_nodes(s):
            raise InsufficientNodesError(f"{s.value} needs K >= {min_nodes(s)}, got K={topology.K}")

    jobs = [
        (topology, schemes, grid, range(lo, min(lo + chunk_size, trials)), master_seed,
         power_ratio, allow_equal_jammers, reciprocal)
        for lo in range(0, trials, chunk_size)
    ]
    log.debug("sweep: %d schemes, %d points, %d trials in %d chunks", len(schemes), grid.size, trials, len(jobs))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_rates, jobs))
    else:
        parts = [_chunk_rates(j) for j in jobs]
    r1 = np.concatenate([p[0] for p in parts], axis=2)
    r2 = np.concatenate([p[1] for p in parts], axis=2)
    jam = np.concatenate([p[2] for p in parts], axis=2)

    results = {}
    for s, scheme in enumerate(schemes):
        total = r1[s] + r2[s]
        stderr = total.std(axis=1, ddof=1) / math.sqrt(trials) if trials > 1 else np.zeros(grid.size)
        results[scheme] = SweepResult(
            scheme=scheme,
            ps_db=grid.copy(),
            ergodic_rate=total.mean(axis=1),
            rate_stderr=stderr,
            rate_s1=r1[s].mean(axis=1),
            rate_s2=r2[s].mean(axis=1),
            jamming_fraction=jam[s].mean(axis=1),
            trials=trials,
            outage_prob=None if target_rate is None else (total < target_rate).mean(axis=1),
            target_rate=target_rate,
            samples=total if keep_samples else None,
        )
    return results


def ergodic_curve(scheme, topology, grid, trials, master_seed, **kw) -> SweepResult:
    return sweep([scheme], topology, grid, trials, master_seed, **kw)[SchemeId.parse(scheme)]


def outage_curve(scheme, topology, grid, trials, master_seed, target_rate: float, **kw) -> SweepResult:
    """Probability that the sum secrecy rate falls strictly below ``target_rate``."""
    return sweep([scheme], topology, grid, trials, master_seed, target_rate=target_rate, **kw)[
        SchemeId.parse(scheme)
    ]


def _window_mask(ps_db, window):
    lo, hi = window
    return (ps_db >= lo - 1e-9) & (ps_db <= hi + 1e-9)


def fit_high_power_slope(result: SweepResult, window=(30.0, 50.0)) -> float:
    """Least-squares slope (BPCU per dB) of the ergodic rate over a dB window."""
    mask = _window_mask(result.ps_db, window)
    if mask.sum() < 2:
        raise ValueError(f"window {window} holds fewer than two grid points")
    x, y = result.ps_db[mask], result.ergodic_rate[mask]
    xc = x - x.mean()
    return float(np.dot(xc, y - y.mean()) / np.dot(xc, xc))


def plateau_value(result: SweepResult, window) -> float:
    mask = _window_mask(result.ps_db, window)
    if not mask.any():
        raise ValueError(f"window {window} holds no grid points")
    return float(result.ergodic_rate[mask].mean())


def crossover_point(x, ya, yb) -> Optional[float]:
    """First power where ``ya - yb`` changes sign, linearly interpolated; None if it never does."""
    x = np.asarray(x, dtype=float)
    d = np.asarray(ya, dtype=float) - np.asarray(yb, dtype=float)
    if x.shape != d.shape:
        raise ValueError("curves and grid must have the same length")
    prev = None
    for i, v in enumerate(d):
        if v == 0:
            continue
        if prev is not None and np.sign(v) != np.sign(d[prev]):
            if i - prev > 1:
                return float(x[prev + 1])  # exact zero(s) in between
            return float(x[prev] + (x[i] - x[prev]) * d[prev] / (d[prev] - v))
        prev = i
    return None


def find_crossover(curve_a: SweepResult, curve_b: SweepResult) -> Optional[float]:
    if curve_a.ps_db.shape != curve_b.ps_db.shape or not np.array_equal(curve_a.ps_db, curve_b.ps_db):
        raise ValueError("curves are on different power grids")
    return crossover_point(curve_a.ps_db, curve_a.ergodic_rate, curve_b.ergodic_rate)
