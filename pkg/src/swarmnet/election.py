"""Weight-based leader election.

Each UAV holds an integer weight. Every tick it reads its neighbors'
weights from the previous tick and applies four ordered rules. The
weight ``leader_id`` marks the leader; ``weight_limit`` is the largest
ordinary weight, and a neighborhood topping out at it promotes a UAV.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import SwarmConfig
from .topology import ProximityGraph

__all__ = [
    "ElectionScratch",
    "scratch",
    "update_weight",
    "election_step",
    "leader_of",
    "leader_count",
    "election_converged",
]


@dataclass(frozen=True)
class ElectionScratch:
    r1_max: Optional[int]
    r2_min: Optional[int]
    r3_leader: Optional[int]


def scratch(neighbor_weights: Sequence[tuple[int, int]], leader_id: int) -> ElectionScratch:
    """Max/min neighbor weight and the lowest-id neighbor currently holding ``leader_id``."""
    if not neighbor_weights:
        return ElectionScratch(None, None, None)
    ws = [w for _, w in neighbor_weights]
    leaders = [nid for nid, w in neighbor_weights if w == leader_id]
    return ElectionScratch(max(ws), min(ws), min(leaders) if leaders else None)


def update_weight(
    self_weight: int,
    self_id: int,
    neighbor_weights: Sequence[tuple[int, int]],
    cfg: SwarmConfig,
) -> int:
    """Next weight of one UAV given ``(id, weight)`` pairs of its neighbors.

    The rules run in order on a working copy; an empty neighborhood keeps the
    weight unchanged. A leader that sees another leader with a smaller id
    steps down to ``leader_id + 1``.
    """
    if not neighbor_weights:
        return self_weight
    limit = cfg.effective_weight_limit
    leader = cfg.effective_leader_id
    s = scratch(neighbor_weights, leader)
    w = self_weight
    if s.r2_min < w:
        w = s.r2_min + 1
    if s.r1_max == limit:
        w = leader
    if s.r2_min >= w and w != leader:
        w = s.r2_min + 1
    if w == leader and s.r3_leader is not None and self_id > s.r3_leader:
        w = w + 1
    return w


def election_step(weights: Sequence[int], graph: ProximityGraph, cfg: SwarmConfig) -> list[int]:
    """Synchronous update of every weight from the same pre-tick snapshot."""
    return [
        update_weight(weights[u], u, [(v, weights[v]) for v in graph.adjacency[u]], cfg)
        for u in range(graph.n)
    ]


def leader_of(weights: Sequence[int], cfg: SwarmConfig) -> Optional[int]:
    """Lowest id holding the leader weight, or None."""
    leader = cfg.effective_leader_id
    for uid, w in enumerate(weights):
        if w == leader:
            return uid
    return None


def leader_count(weights: Sequence[int], cfg: SwarmConfig) -> int:
    leader = cfg.effective_leader_id
    return sum(1 for w in weights if w == leader)


def election_converged(history: Sequence[Sequence[int]], window: int, cfg: SwarmConfig) -> bool:
    """True when the last ``window`` weight vectors agree and exactly one UAV leads."""
    if window < 1:
        raise ValueError("window must be >= 1")
    if len(history) < window:
        return False
    last = list(history[-1])
    if any(list(h) != last for h in history[-window:]):
        return False
    return leader_count(last, cfg) == 1
