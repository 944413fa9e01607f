"""Range-limited communication graph over UAV positions."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import SwarmConfig, Vec3

__all__ = ["ProximityGraph", "build_graph", "neighbors", "is_connected", "refresh"]


@dataclass(frozen=True)
class ProximityGraph:
    """Immutable snapshot of the symmetric Euclidean graph.

    ``adjacency[u]`` is the ascending tuple of ids within ``range_used`` of ``u``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    range_used: float

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def build_graph(positions: Sequence[Vec3], range_: float) -> ProximityGraph:
    """Connect every pair of UAVs whose distance is at most ``range_``."""
    if range_ <= 0:
        raise ValueError(f"range must be positive, got {range_}")
    n = len(positions)
    adj: list[list[int]] = [[] for _ in range(n)]
    # ascending u then v keeps each neighbor list sorted without a sort pass
    dist = math.dist
    for u in range(n):
        pu = positions[u]
        for v in range(u + 1, n):
            if dist(pu, positions[v]) <= range_:
                adj[u].append(v)
                adj[v].append(u)
    return ProximityGraph(n=n, adjacency=tuple(tuple(a) for a in adj), range_used=float(range_))


def neighbors(g: ProximityGraph, u: int) -> list[int]:
    if not 0 <= u < g.n:
        raise IndexError(f"UAV id {u} out of range for graph of {g.n} nodes")
    return list(g.adjacency[u])


def is_connected(g: ProximityGraph) -> bool:
    """Breadth-first reachability from node 0."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                queue.append(v)
    return reached == g.n


def refresh(g: ProximityGraph, positions: Sequence[Vec3], tick: int, cfg: SwarmConfig) -> ProximityGraph:
    """Rebuild the graph on refresh ticks; otherwise keep the stale snapshot."""
    if len(positions) != g.n:
        raise ValueError(f"expected {g.n} positions, got {len(positions)}")
    if tick % cfg.f_refresh_ticks == 0:
        return build_graph(positions, g.range_used)
    return g
