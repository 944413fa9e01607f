"""Discrete-time simulator for a networked leader-follower UAV swarm.

The swarm elects a leader with a neighbor-weight rule, keeps a
range-limited communication graph, and flocks toward a destination
that only the leader knows.
"""

from .core import ConfigError, DegenerateDirection, SwarmConfig, UavState, Vec3, distance, norm_scale
from .engine import Phase, SimResult, SimState, TickRecord, deploy, run, tick
from .experiment import ExperimentSummary, RunRecord, run_experiment
from .metrics import connectivity_fraction, min_pairwise_distance, overhead_percent, theoretical_time
from .topology import ProximityGraph, build_graph, is_connected, neighbors, refresh

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DegenerateDirection",
    "ExperimentSummary",
    "Phase",
    "ProximityGraph",
    "RunRecord",
    "SimResult",
    "SimState",
    "SwarmConfig",
    "TickRecord",
    "UavState",
    "Vec3",
    "build_graph",
    "connectivity_fraction",
    "deploy",
    "distance",
    "is_connected",
    "min_pairwise_distance",
    "neighbors",
    "norm_scale",
    "overhead_percent",
    "refresh",
    "run",
    "run_experiment",
    "theoretical_time",
    "tick",
]
