"""Invariant checks run by ``swarmnet check`` on a configuration."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import election, topology
from .core import SwarmConfig, distance
from .engine import Phase, SimResult, deploy, run
from .fileio import trace_lines


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _trace_finite(res: SimResult) -> CheckResult:
    bad = [
        rec.tick
        for rec in res.trace
        if not all(p.is_finite() for p in rec.positions) or not all(v.is_finite() for v in rec.velocities)
    ]
    return CheckResult("trace is finite", not bad, f"first bad tick {bad[0]}" if bad else "")


def _graph_threshold(res: SimResult) -> CheckResult:
    for rec in res.trace:
        g = topology.build_graph(rec.positions, rec.range_used)
        if tuple(g.edges()) != rec.edges:
            return CheckResult("graph matches distance threshold", False, f"tick {rec.tick}")
        for u, v in rec.edges:
            if u == v or distance(rec.positions[u], rec.positions[v]) > rec.range_used:
                return CheckResult("graph matches distance threshold", False, f"edge {u}-{v} at tick {rec.tick}")
    return CheckResult("graph matches distance threshold", True)


def _phase_monotone(res: SimResult) -> CheckResult:
    seen = False
    for rec in res.trace:
        if rec.phase is Phase.ARRIVED:
            seen = True
        elif seen:
            return CheckResult("arrival phase persists", False, f"tick {rec.tick}")
    return CheckResult("arrival phase persists", True)


def _no_collision(res: SimResult) -> CheckResult:
    d = res.min_pairwise_distance
    ok = d is None or d > 0
    return CheckResult("min pairwise distance > 0", ok, f"min {d!r}")


def _result_contract(res: SimResult, cfg: SwarmConfig) -> CheckResult:
    if res.arrival_tick is None:
        ok = res.ticks_run == cfg.max_ticks
    else:
        ok = res.arrival_tick <= res.ticks_run <= cfg.max_ticks
    return CheckResult("arrival/budget contract", ok, f"arrival={res.arrival_tick} ticks_run={res.ticks_run}")


def _election_on_deployment(cfg: SwarmConfig, ticks: int = 50) -> list[CheckResult]:
    state = deploy(cfg)
    w = state.weights
    for _ in range(ticks):
        w = election.election_step(w, state.graph, cfg)
    count = election.leader_count(w, cfg)
    lid, limit = cfg.effective_leader_id, cfg.effective_weight_limit
    stray = sorted({x for x in w if x != lid and not 0 <= x <= limit})
    return [
        CheckResult("single leader on deployment graph", count == 1, f"{count} leaders, weights {w}"),
        CheckResult(
            "settled weights in [0, weight_limit] or leader",
            not stray,
            f"out-of-range weights {stray}" if stray else "",
        ),
    ]


def run_checks(cfg: SwarmConfig) -> list[CheckResult]:
    res = run(cfg)
    again = run(cfg)
    rev = run(cfg, reverse_order=True)
    out = [
        _trace_finite(res),
        _graph_threshold(res),
        _phase_monotone(res),
        _no_collision(res),
        _result_contract(res, cfg),
        CheckResult("deterministic trace", list(trace_lines(res)) == list(trace_lines(again))),
        CheckResult("iteration-order independent", list(trace_lines(res)) == list(trace_lines(rev))),
        CheckResult(
            "max speed finite",
            math.isfinite(res.max_speed),
            f"{res.max_speed:.3g} m/step",
        ),
    ]
    if cfg.n > 1:
        out.extend(_election_on_deployment(cfg))
    return out
