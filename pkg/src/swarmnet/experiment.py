"""Replicated arrival-time experiment over several swarm sizes."""

from __future__ import annotations

import dataclasses
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import SwarmConfig
from .engine import run
from .metrics import UnconvergedElectionWarning, connectivity_fraction, overhead_percent, theoretical_time

__all__ = ["RunRecord", "AggregateRow", "ExperimentSummary", "run_one", "run_experiment"]


@dataclass(frozen=True)
class RunRecord:
    n: int
    replicate: int
    seed: int
    arrival_tick: Optional[int]
    connectivity_fraction: float
    min_pairwise_distance: Optional[float]


@dataclass(frozen=True)
class AggregateRow:
    n: int
    mean_arrival: Optional[float]
    overhead_pct: Optional[float]
    arrived: int
    censored: int
    mean_connectivity: float
    min_pairwise_distance: Optional[float]


@dataclass(frozen=True)
class ExperimentSummary:
    """Per-run records plus per-size aggregates derived from them.

    Runs that never arrive are censored: they are counted but left out of
    the mean arrival time.
    """

    runs: tuple[RunRecord, ...]
    theoretical: float

    @property
    def n_values(self) -> list[int]:
        return sorted({r.n for r in self.runs})

    def rows_for(self, n: int) -> list[RunRecord]:
        return [r for r in self.runs if r.n == n]

    def aggregate(self, n: int) -> AggregateRow:
        rows = self.rows_for(n)
        done = [r.arrival_tick for r in rows if r.arrival_tick is not None]
        mean = sum(done) / len(done) if done else None
        dists = [r.min_pairwise_distance for r in rows if r.min_pairwise_distance is not None]
        return AggregateRow(
            n=n,
            mean_arrival=mean,
            overhead_pct=None if mean is None else overhead_percent(mean, self.theoretical),
            arrived=len(done),
            censored=len(rows) - len(done),
            mean_connectivity=sum(r.connectivity_fraction for r in rows) / len(rows),
            min_pairwise_distance=min(dists) if dists else None,
        )

    @property
    def aggregates(self) -> list[AggregateRow]:
        return [self.aggregate(n) for n in self.n_values]


def run_one(cfg: SwarmConfig, replicate: int) -> RunRecord:
    res = run(cfg)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnconvergedElectionWarning)
        conn = connectivity_fraction(res.trace)
    return RunRecord(
        n=cfg.n,
        replicate=replicate,
        seed=cfg.seed,
        arrival_tick=res.arrival_tick,
        connectivity_fraction=conn,
        min_pairwise_distance=res.min_pairwise_distance,
    )


def _job(args):
    return run_one(*args)


def run_experiment(
    cfg_base: SwarmConfig,
    n_values: Sequence[int],
    replicates: int,
    seed_base: int,
    workers: int = 1,
) -> ExperimentSummary:
    """Run every ``(n, replicate)`` pair with seed ``seed_base + replicate``.

    Results are ordered by ``(n, replicate)`` whatever ``workers`` is.
    """
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    jobs = [
        (dataclasses.replace(cfg_base, n=n, seed=seed_base + k), k)
        for n in n_values
        for k in range(replicates)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_job, jobs))
    else:
        runs = [_job(j) for j in jobs]
    theo = theoretical_time(cfg_base.d1, cfg_base.d2, cfg_base.vel_leader)
    return ExperimentSummary(runs=tuple(runs), theoretical=theo)
