"""Arrival-time and connectivity metrics."""

from __future__ import annotations

import warnings
from itertools import combinations
from typing import Optional, Sequence

from .core import ConfigError, Vec3, distance
from .engine import TickRecord

__all__ = [
    "UnconvergedElectionWarning",
    "theoretical_time",
    "overhead_percent",
    "min_pairwise_distance",
    "convergence_tick",
    "connectivity_fraction",
]

DEFAULT_WINDOW = 5


class UnconvergedElectionWarning(UserWarning):
    """The election never settled on one leader within the trace."""


def theoretical_time(d1: Vec3, d2: Vec3, vel_leader: float) -> float:
    """Steps a lone UAV needs to fly straight from ``d1`` to ``d2``."""
    if not vel_leader > 0:
        raise ConfigError(f"must be > 0, got {vel_leader}", field="vel_leader")
    return distance(d1, d2) / vel_leader


def overhead_percent(actual: float, theoretical: float) -> float:
    if not theoretical > 0:
        raise ValueError(f"theoretical time must be positive, got {theoretical}")
    return 100.0 * (actual - theoretical) / theoretical


def min_pairwise_distance(positions: Sequence[Vec3]) -> float:
    if len(positions) < 2:
        raise ValueError("need at least two positions")
    return min(distance(a, b) for a, b in combinations(positions, 2))


def convergence_tick(trace: Sequence[TickRecord], window: int = DEFAULT_WINDOW) -> Optional[int]:
    """Index of the first record whose last ``window`` weight vectors agree with exactly one leader."""
    if window < 1:
        raise ValueError("window must be >= 1")
    for i in range(window - 1, len(trace)):
        rec = trace[i]
        if sum(rec.leaders) != 1:
            continue
        if all(trace[j].weights == rec.weights for j in range(i - window + 1, i)):
            return i
    return None


def connectivity_fraction(
    trace: Sequence[TickRecord],
    window: int = DEFAULT_WINDOW,
) -> float:
    """Share of recorded ticks with a connected graph, counted from election convergence.

    When the election never converges the whole trace is used and an
    :class:`UnconvergedElectionWarning` is issued.
    """
    if not trace:
        raise ValueError("empty trace")
    start = convergence_tick(trace, window)
    if start is None:
        warnings.warn(
            "election never converged; connectivity measured over the whole trace",
            UnconvergedElectionWarning,
            stacklevel=2,
        )
        start = 0
    tail = trace[start:]
    return sum(1 for rec in tail if rec.connected) / len(tail)
