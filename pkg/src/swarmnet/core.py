"""Domain types and 3-D vector helpers shared by the rest of the package.

Positions are in meters; velocities are meters per simulation step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import NamedTuple, Optional

__all__ = [
    "Vec3",
    "ZERO",
    "UavState",
    "SwarmConfig",
    "ConfigError",
    "DegenerateDirection",
    "distance",
    "norm",
    "norm_scale",
]


class ConfigError(ValueError):
    """A configuration value violates its documented constraints."""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = (", ".join(where) + ": ") if where else ""
        super().__init__(prefix + message)


class DegenerateDirection(ValueError):
    """Raised when a direction is requested from a zero-length vector."""


_new = tuple.__new__


class Vec3(NamedTuple):
    x: float
    y: float
    z: float

    # tuple's + and * mean concatenation/repetition; override with vector semantics
    def __add__(self, other):  # type: ignore[override]
        return _new(Vec3, (self[0] + other[0], self[1] + other[1], self[2] + other[2]))

    def __sub__(self, other):
        return _new(Vec3, (self[0] - other[0], self[1] - other[1], self[2] - other[2]))

    def __mul__(self, s):  # type: ignore[override]
        return _new(Vec3, (self[0] * s, self[1] * s, self[2] * s))

    __rmul__ = __mul__

    def __truediv__(self, s):
        return _new(Vec3, (self[0] / s, self[1] / s, self[2] / s))

    def __neg__(self):
        return _new(Vec3, (-self[0], -self[1], -self[2]))

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)

    @classmethod
    def of(cls, v) -> "Vec3":
        x, y, z = v
        return cls(float(x), float(y), float(z))


ZERO = Vec3(0.0, 0.0, 0.0)


def norm(v: Vec3) -> float:
    """Euclidean length of *v*."""
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def distance(a: Vec3, b: Vec3) -> float:
    """Euclidean distance between two points."""
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    dz = a[2] - b[2]
    return math.sqrt(dx * dx + dy * dy + dz * dz)


def norm_scale(v: Vec3, target_len: float) -> Vec3:
    """Vector parallel to *v* with length *target_len*.

    Raises DegenerateDirection for the zero vector, which has no direction.
    """
    n = norm(v)
    if n == 0.0:
        raise DegenerateDirection("cannot scale a zero-length vector")
    k = target_len / n
    return Vec3(v[0] * k, v[1] * k, v[2] * k)


@dataclass(frozen=True)
class UavState:
    id: int
    pos: Vec3
    vel: Vec3
    weight: int


@dataclass(frozen=True)
class SwarmConfig:
    """Every tunable constant of a simulation run.

    ``weight_limit`` defaults to ``n`` and ``leader_id`` to ``weight_limit + 1``.
    ``r_travel`` defaults to ``r`` (no reduced en-route range).
    """

    n: int = 8
    l: float = 200.0
    r: float = 55.0
    r_travel: Optional[float] = None
    f_refresh_ticks: int = 1
    d1: Vec3 = Vec3(25.0, 25.0, 25.0)
    d2: Vec3 = Vec3(100.0, 100.0, 100.0)
    vel_leader: float = 0.7
    arrive_eps: float = 5.0
    weight_limit: Optional[int] = None
    leader_id: Optional[int] = None
    cohesion_gain: float = 0.2
    sep_radius: float = 100.0
    align_gain: float = 0.2
    cap_leader_speed: bool = True
    deploy_jitter: float = 5.0
    seed: int = 0
    max_ticks: int = 5000
    swarm_arrive_radius: float = 55.0
    post_arrival_ticks: int = 0

    def __post_init__(self):
        object.__setattr__(self, "d1", Vec3.of(self.d1))
        object.__setattr__(self, "d2", Vec3.of(self.d2))
        self.validate()

    # Unset derived fields stay None so dataclasses.replace(cfg, n=...) re-derives them.
    @property
    def effective_weight_limit(self) -> int:
        return self.n if self.weight_limit is None else self.weight_limit

    @property
    def effective_leader_id(self) -> int:
        return self.effective_weight_limit + 1 if self.leader_id is None else self.leader_id

    @property
    def effective_r_travel(self) -> float:
        return self.r if self.r_travel is None else self.r_travel

    def validate(self) -> None:
        def need(ok: bool, name: str, msg: str) -> None:
            if not ok:
                raise ConfigError(msg, field=name)

        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                continue
            if isinstance(v, float):
                need(math.isfinite(v), f.name, f"must be finite, got {v!r}")
        need(self.d1.is_finite(), "d1", "must be finite")
        need(self.d2.is_finite(), "d2", "must be finite")
        need(self.n >= 1, "n", f"must be >= 1, got {self.n}")
        need(self.l > 0, "l", f"must be > 0, got {self.l}")
        need(self.r > 0, "r", f"must be > 0, got {self.r}")
        need(self.effective_r_travel > 0, "r_travel", f"must be > 0, got {self.r_travel}")
        need(self.f_refresh_ticks >= 1, "f_refresh_ticks", f"must be >= 1, got {self.f_refresh_ticks}")
        need(self.vel_leader > 0, "vel_leader", f"must be > 0, got {self.vel_leader}")
        need(self.arrive_eps >= 0, "arrive_eps", f"must be >= 0, got {self.arrive_eps}")
        wl, lid = self.effective_weight_limit, self.effective_leader_id
        need(wl >= 0, "weight_limit", f"must be >= 0, got {wl}")
        need(lid > wl, "leader_id", f"must exceed weight_limit ({wl}), got {lid}")
        need(self.sep_radius >= 0, "sep_radius", f"must be >= 0, got {self.sep_radius}")
        need(self.deploy_jitter >= 0, "deploy_jitter", f"must be >= 0, got {self.deploy_jitter}")
        need(self.max_ticks > 0, "max_ticks", f"must be > 0, got {self.max_ticks}")
        need(self.post_arrival_ticks >= 0, "post_arrival_ticks", "must be >= 0")
        need(self.swarm_arrive_radius >= 0, "swarm_arrive_radius", "must be >= 0")
        need(0 <= self.seed < 2**64, "seed", f"must be a 64-bit unsigned integer, got {self.seed}")
