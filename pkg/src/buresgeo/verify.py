"""Cross-route comparison reports and deterministic verification sweeps.

Every fidelity in this package can be computed three ways: the matrix
definition, the closed Bloch form, and the hyperbolic rapidity formula.
``compare`` joins the routes valid for one pair of states into a report;
``sweep`` drives them over seeded Monte Carlo samples and summarizes the
disagreement.  Trials are keyed by (seed, index), so a sweep returns the
same result for any execution order or worker count, not merely a
statistically equivalent one.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .hyperbolic import fidelity_hyperbolic
from .measures import bures_fidelity_closed, bures_fidelity_matrix, trace_distance_bloch
from .qubit import (
    PURE_NORM,
    REGIMES,
    as_bloch_vector,
    bloch_norm,
    density_from_bloch,
    random_bloch_indexed,
)

__all__ = ["FidelityReport", "SweepSummary", "compare", "sweep"]

# Norm bands for the regime flags on a report: within NEAR_PURE_BAND of
# the sphere counts as near_pure, below NEAR_MIXED_BAND as near_mixed.
NEAR_PURE_BAND = 1e-3
NEAR_MIXED_BAND = 1e-3


@dataclass(frozen=True)
class FidelityReport:
    """All routes computed for one pair, with their worst disagreement.

    ``f_hyperbolic`` is None when either input is flagged pure: the
    rapidity route is undefined there and ``max_pairwise_diff`` covers
    only the routes actually computed.
    """

    u: tuple
    v: tuple
    f_matrix: float
    f_hyperbolic: Optional[float]
    f_closed: float
    d_trace: float
    max_pairwise_diff: float
    regime_flags: frozenset


@dataclass(frozen=True)
class SweepSummary:
    """Disagreement statistics over a seeded batch of trials."""

    trials: int
    seed: int
    regime_u: str
    regime_v: str
    max_diff: float
    mean_diff: float
    p99_diff: float
    worst_u: tuple
    worst_v: tuple
    worst_index: int
    elapsed_seconds: float


def _flags(ru: float, rv: float) -> frozenset:
    flags = set()
    if ru > PURE_NORM:
        flags.add("pure_u")
    if rv > PURE_NORM:
        flags.add("pure_v")
    if (1.0 - NEAR_PURE_BAND < ru <= PURE_NORM) or (1.0 - NEAR_PURE_BAND < rv <= PURE_NORM):
        flags.add("near_pure")
    if ru < NEAR_MIXED_BAND or rv < NEAR_MIXED_BAND:
        flags.add("near_mixed")
    return frozenset(flags)


def compare(u, v) -> FidelityReport:
    """Compute every route valid for (u, v) and report their spread.

    Never raises on pure inputs; the hyperbolic route is simply omitted
    and flagged.
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    if u.shape != (3,) or v.shape != (3,):
        raise ValueError("compare takes a single pair of Bloch vectors")
    ru = float(bloch_norm(u))
    rv = float(bloch_norm(v))
    flags = _flags(ru, rv)

    f_closed = float(bures_fidelity_closed(u, v))
    f_matrix = float(bures_fidelity_matrix(density_from_bloch(u), density_from_bloch(v)))
    pure = "pure_u" in flags or "pure_v" in flags
    f_hyperbolic = None if pure else float(fidelity_hyperbolic(u, v))

    values = [f_matrix, f_closed] if pure else [f_matrix, f_hyperbolic, f_closed]
    spread = max(abs(a - b) for i, a in enumerate(values) for b in values[i + 1 :])

    return FidelityReport(
        u=tuple(float(x) for x in u),
        v=tuple(float(x) for x in v),
        f_matrix=f_matrix,
        f_hyperbolic=f_hyperbolic,
        f_closed=f_closed,
        d_trace=float(trace_distance_bloch(u, v)),
        max_pairwise_diff=float(spread),
        regime_flags=flags,
    )


def _route_spread(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Vectorized max pairwise route difference, one value per pair."""
    f_closed = bures_fidelity_closed(u, v)
    f_matrix = bures_fidelity_matrix(density_from_bloch(u), density_from_bloch(v))
    spread = np.abs(f_matrix - f_closed)
    finite = (bloch_norm(u) <= PURE_NORM) & (bloch_norm(v) <= PURE_NORM)
    if np.any(finite):
        f_hyp = fidelity_hyperbolic(u[finite], v[finite])
        extra = np.maximum(
            np.abs(f_hyp - f_matrix[finite]), np.abs(f_hyp - f_closed[finite])
        )
        spread[finite] = np.maximum(spread[finite], extra)
    return spread


def sweep(seed, trials: int, regime_u: str, regime_v: str, workers: int = 1) -> SweepSummary:
    """Run ``trials`` seeded comparisons and summarize the route spread.

    The trial at index i always sees the same pair of states, so the
    summary (elapsed aside) is a pure function of (seed, trials,
    regime_u, regime_v).  ``workers`` only controls how the index range
    is partitioned for execution; per-trial values are written into one
    array and reduced in index order, which keeps the output identical
    across any worker count.  Ties for the worst pair resolve to the
    lowest trial index.
    """
    start = time.perf_counter()
    trials = int(trials)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    workers = int(workers)
    if workers < 1:
        raise ValueError("workers must be at least 1")
    for regime in (regime_u, regime_v):
        if regime not in REGIMES:
            raise ValueError(f"unknown regime {regime!r}; expected one of {REGIMES}")

    diffs = np.empty(trials)

    def run_block(lo: int, hi: int) -> None:
        idx = np.arange(lo, hi)
        u = random_bloch_indexed(seed, regime_u, idx, stream=0)
        v = random_bloch_indexed(seed, regime_v, idx, stream=1)
        diffs[lo:hi] = _route_spread(u, v)

    if workers == 1:
        run_block(0, trials)
    else:
        step = -(-trials // workers)
        bounds = [(lo, min(lo + step, trials)) for lo in range(0, trials, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for future in [pool.submit(run_block, lo, hi) for lo, hi in bounds]:
                future.result()

    worst = int(np.argmax(diffs))
    # fsum is exactly rounded, so the mean cannot depend on partitioning.
    mean = math.fsum(diffs) / trials
    worst_u = random_bloch_indexed(seed, regime_u, worst, stream=0)
    worst_v = random_bloch_indexed(seed, regime_v, worst, stream=1)

    return SweepSummary(
        trials=trials,
        seed=int(seed),
        regime_u=regime_u,
        regime_v=regime_v,
        max_diff=float(diffs[worst]),
        mean_diff=float(mean),
        p99_diff=float(np.percentile(diffs, 99.0)),
        worst_u=tuple(float(x) for x in worst_u),
        worst_v=tuple(float(x) for x in worst_v),
        worst_index=worst,
        elapsed_seconds=time.perf_counter() - start,
    )
