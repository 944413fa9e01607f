"""Leader-follower flocking: cohesion, separation, alignment and goal seeking.

All rule functions read a snapshot of the UAV and its neighbors and return
a velocity increment. Neighbors are summed in ascending id order so results
do not depend on the caller's iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import ZERO, SwarmConfig, UavState, Vec3, distance, norm, norm_scale

__all__ = [
    "FlockTerms",
    "cohesion_vel",
    "separation_vel",
    "alignment_vel",
    "leader_goal_vel",
    "flock_terms",
    "step_uav",
]


@dataclass(frozen=True)
class FlockTerms:
    v1_cohesion: Vec3 = ZERO
    v2_separation: Vec3 = ZERO
    v3_alignment: Vec3 = ZERO
    v4_goal: Vec3 = ZERO

    def total(self) -> Vec3:
        return self.v1_cohesion + self.v2_separation + self.v3_alignment + self.v4_goal


def _ordered(nbrs: Sequence[UavState]) -> list[UavState]:
    return sorted(nbrs, key=lambda s: s.id)


def _mean(vs: list[Vec3]) -> Vec3:
    sx = sy = sz = 0.0
    for v in vs:
        sx += v[0]
        sy += v[1]
        sz += v[2]
    k = len(vs)
    return Vec3(sx / k, sy / k, sz / k)


def cohesion_vel(u: UavState, nbrs: Sequence[UavState], cfg: SwarmConfig) -> Vec3:
    """Pull toward the mean position of the neighbors."""
    if not nbrs:
        return ZERO
    centre = _mean([n.pos for n in _ordered(nbrs)])
    return (centre - u.pos) * cfg.cohesion_gain


def separation_vel(u: UavState, nbrs: Sequence[UavState], cfg: SwarmConfig) -> Vec3:
    """Push away from every neighbor closer than ``sep_radius`` (strict)."""
    acc = ZERO
    for n in _ordered(nbrs):
        if distance(n.pos, u.pos) < cfg.sep_radius:
            acc = acc - (n.pos - u.pos)
    return acc


def alignment_vel(u: UavState, nbrs: Sequence[UavState], cfg: SwarmConfig) -> Vec3:
    # divisor is |N(u)|: the neighbor set never contains u itself
    if not nbrs:
        return ZERO
    avg = _mean([n.vel for n in _ordered(nbrs)])
    return (avg - u.vel) * cfg.align_gain


def leader_goal_vel(u: UavState, is_leader: bool, cfg: SwarmConfig) -> Vec3:
    """Velocity of length ``vel_leader`` toward ``d2`` for the leader, zero otherwise.

    The leader stops pushing once strictly within ``arrive_eps`` of the destination.
    """
    if not is_leader:
        return ZERO
    diff = cfg.d2 - u.pos
    if norm(diff) < cfg.arrive_eps:
        return ZERO
    return norm_scale(diff, cfg.vel_leader)


def flock_terms(u: UavState, nbrs: Sequence[UavState], is_leader: bool, cfg: SwarmConfig) -> FlockTerms:
    return FlockTerms(
        v1_cohesion=cohesion_vel(u, nbrs, cfg),
        v2_separation=separation_vel(u, nbrs, cfg),
        v3_alignment=alignment_vel(u, nbrs, cfg),
        v4_goal=leader_goal_vel(u, is_leader, cfg),
    )


def step_uav(u: UavState, terms: FlockTerms, speed_limit: Optional[float] = None) -> UavState:
    """Add the velocity terms and move one step at the new velocity.

    With ``speed_limit`` set, the new velocity is rescaled to at most that length
    before the move.
    """
    vel = u.vel + terms.total()
    if speed_limit is not None:
        s = norm(vel)
        if s > speed_limit:
            vel = vel * (speed_limit / s)
    return UavState(id=u.id, pos=u.pos + vel, vel=vel, weight=u.weight)
