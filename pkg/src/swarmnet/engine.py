"""Discrete-time swarm simulation loop.

One tick reads the tick-t snapshot of every UAV and writes tick t+1:
refresh the proximity graph, update election weights, compute flocking
terms, integrate. Randomness is used only when deploying.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from . import election, flocking, topology
from .core import ZERO, SwarmConfig, UavState, Vec3, distance, norm
from .topology import ProximityGraph

__all__ = ["Phase", "SimState", "TickRecord", "SimResult", "deploy", "tick", "run", "current_graph"]


class Phase(enum.Enum):
    TRAVEL = "travel"
    ARRIVED = "arrived"


@dataclass(frozen=True)
class SimState:
    tick: int
    uavs: tuple[UavState, ...]
    graph: ProximityGraph
    phase: Phase
    rng: np.random.Generator = field(compare=False, repr=False)

    @property
    def positions(self) -> list[Vec3]:
        return [u.pos for u in self.uavs]

    @property
    def weights(self) -> list[int]:
        return [u.weight for u in self.uavs]


@dataclass(frozen=True)
class TickRecord:
    tick: int
    phase: Phase
    positions: tuple[Vec3, ...]
    velocities: tuple[Vec3, ...]
    weights: tuple[int, ...]
    leaders: tuple[bool, ...]
    edges: tuple[tuple[int, int], ...]
    range_used: float
    connected: bool
    min_pairwise_distance: Optional[float]
    out_of_region: bool


@dataclass
class SimResult:
    config: SwarmConfig
    arrival_tick: Optional[int]
    ticks_run: int
    trace: list[TickRecord]
    leader_id_timeline: list[Optional[int]]
    trace_stride: int = 1
    min_pairwise_distance: Optional[float] = None
    max_speed: float = 0.0
    left_region: bool = False
    swarm_arrival_tick: Optional[int] = None

    @property
    def arrived(self) -> bool:
        return self.arrival_tick is not None


def _pairwise_min(positions: Sequence[Vec3]) -> Optional[float]:
    if len(positions) < 2:
        return None
    return min(map(math.dist, *zip(*combinations(positions, 2))))


def deploy(cfg: SwarmConfig, shuffle_weights: bool = False) -> SimState:
    """Scatter ``cfg.n`` UAVs uniformly in a cube of half-width ``deploy_jitter`` around ``d1``.

    Positions are clipped to the region ``[0, l]^3``. Initial weights are the
    UAV ids, or a seeded permutation of them when ``shuffle_weights`` is set.
    A one-UAV swarm starts as its own leader.
    """
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    offsets = rng.uniform(-cfg.deploy_jitter, cfg.deploy_jitter, size=(cfg.n, 3))
    pts = np.clip(np.asarray(cfg.d1, dtype=float) + offsets, 0.0, cfg.l)
    weights = rng.permutation(cfg.n).tolist() if shuffle_weights else list(range(cfg.n))
    if cfg.n == 1:
        weights = [cfg.effective_leader_id]
    uavs = tuple(
        UavState(id=i, pos=Vec3.of(pts[i].tolist()), vel=ZERO, weight=int(weights[i]))
        for i in range(cfg.n)
    )
    graph = topology.build_graph([u.pos for u in uavs], cfg.effective_r_travel)
    return SimState(tick=0, uavs=uavs, graph=graph, phase=Phase.TRAVEL, rng=rng)


def tick(
    state: SimState,
    cfg: SwarmConfig,
    order: Optional[Sequence[int]] = None,
    graph: Optional[ProximityGraph] = None,
) -> SimState:
    """Advance one synchronous step.

    ``order`` permutes the per-UAV evaluation; with all reads taken from the
    pre-tick snapshot it cannot change the result. ``graph`` may carry the
    already-refreshed graph for this tick (see :func:`current_graph`).
    """
    uavs = state.uavs
    n = len(uavs)
    ids = range(n) if order is None else order
    if graph is None:
        graph = current_graph(state, cfg)
    weights = [u.weight for u in uavs]
    leader_w = cfg.effective_leader_id
    cap = cfg.vel_leader if cfg.cap_leader_speed else None

    nxt: dict[int, UavState] = {}
    for i in ids:
        u = uavs[i]
        nbr_ids = graph.adjacency[i]
        new_w = election.update_weight(u.weight, i, [(j, weights[j]) for j in nbr_ids], cfg)
        is_leader = u.weight == leader_w
        terms = flocking.flock_terms(u, [uavs[j] for j in nbr_ids], is_leader, cfg)
        moved = flocking.step_uav(u, terms, speed_limit=cap if is_leader else None)
        nxt[i] = UavState(id=i, pos=moved.pos, vel=moved.vel, weight=new_w)

    new_uavs = tuple(nxt[i] for i in range(n))
    phase = state.phase
    if phase is Phase.TRAVEL:
        lead = election.leader_of([u.weight for u in new_uavs], cfg)
        if lead is not None and distance(new_uavs[lead].pos, cfg.d2) < cfg.arrive_eps:
            phase = Phase.ARRIVED
            graph = topology.build_graph([u.pos for u in new_uavs], cfg.r)
    return SimState(tick=state.tick + 1, uavs=new_uavs, graph=graph, phase=phase, rng=state.rng)


def current_graph(state: SimState, cfg: SwarmConfig) -> ProximityGraph:
    """The graph the swarm will use for its next tick."""
    return topology.refresh(state.graph, state.positions, state.tick, cfg)


def _record(state: SimState, cfg: SwarmConfig, g: ProximityGraph, min_d: Optional[float]) -> TickRecord:
    pos = tuple(u.pos for u in state.uavs)
    lw = cfg.effective_leader_id
    return TickRecord(
        tick=state.tick,
        phase=state.phase,
        positions=pos,
        velocities=tuple(u.vel for u in state.uavs),
        weights=tuple(u.weight for u in state.uavs),
        leaders=tuple(u.weight == lw for u in state.uavs),
        edges=tuple(g.edges()),
        range_used=g.range_used,
        connected=topology.is_connected(g),
        min_pairwise_distance=min_d,
        out_of_region=any(not 0.0 <= c <= cfg.l for p in pos for c in p),
    )


def run(
    cfg: SwarmConfig,
    trace_stride: int = 1,
    reverse_order: bool = False,
    shuffle_weights: bool = False,
) -> SimResult:
    """Tick until the leader arrives (plus ``post_arrival_ticks``) or ``max_ticks`` is spent.

    Running out of budget is not an error: the result has ``arrival_tick = None``.
    """
    if trace_stride < 1:
        raise ValueError("trace_stride must be >= 1")
    state = deploy(cfg, shuffle_weights=shuffle_weights)
    order = list(range(cfg.n - 1, -1, -1)) if reverse_order else None

    trace: list[TickRecord] = []
    timeline: list[Optional[int]] = []
    min_d: Optional[float] = None
    max_speed = 0.0
    left = False
    swarm_tick: Optional[int] = None
    arrival: Optional[int] = None
    stop_at = cfg.max_ticks

    while True:
        pos = state.positions
        timeline.append(election.leader_of(state.weights, cfg))
        d = _pairwise_min(pos)
        if d is not None and (min_d is None or d < min_d):
            min_d = d
        max_speed = max([max_speed] + [norm(u.vel) for u in state.uavs])
        left = left or any(not 0.0 <= c <= cfg.l for p in pos for c in p)
        if swarm_tick is None and all(distance(p, cfg.d2) <= cfg.swarm_arrive_radius for p in pos):
            swarm_tick = state.tick
        g = current_graph(state, cfg)
        if state.tick % trace_stride == 0:
            trace.append(_record(state, cfg, g, d))
        if state.tick >= stop_at:
            break
        state = tick(state, cfg, order=order, graph=g)
        if arrival is None and state.phase is Phase.ARRIVED:
            arrival = state.tick
            stop_at = min(cfg.max_ticks, state.tick + cfg.post_arrival_ticks)

    return SimResult(
        config=cfg,
        arrival_tick=arrival,
        ticks_run=state.tick,
        trace=trace,
        leader_id_timeline=timeline,
        trace_stride=trace_stride,
        min_pairwise_distance=min_d,
        max_speed=max_speed,
        left_region=left,
        swarm_arrival_tick=swarm_tick,
    )


def is_finite_state(state: SimState) -> bool:
    return all(u.pos.is_finite() and u.vel.is_finite() for u in state.uavs)
