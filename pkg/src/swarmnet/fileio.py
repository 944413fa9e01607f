"""Config, trace and summary file formats.

Config files are flat ``key = value`` text with ``#`` comments and vectors
written as ``x, y, z``. Traces are JSON Lines, one record per recorded tick.
Summaries are CSV: a per-run block, a blank line, then a per-size block.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from pathlib import Path
from typing import Iterable, Optional, Union

from .core import ConfigError, SwarmConfig, Vec3
from .engine import Phase, SimResult, TickRecord
from .experiment import ExperimentSummary, RunRecord
from .metrics import theoretical_time

__all__ = [
    "parse_config",
    "parse_config_text",
    "format_config",
    "write_config",
    "trace_lines",
    "emit_trace",
    "read_trace",
    "RUN_HEADER",
    "AGG_HEADER",
    "format_summary",
    "emit_summary",
    "read_summary",
]

PathLike = Union[str, Path]

_INT, _FLOAT, _VEC, _BOOL = "int", "float", "vec", "bool"
_KINDS = {
    "n": _INT,
    "l": _FLOAT,
    "r": _FLOAT,
    "r_travel": _FLOAT,
    "f_refresh_ticks": _INT,
    "d1": _VEC,
    "d2": _VEC,
    "vel_leader": _FLOAT,
    "arrive_eps": _FLOAT,
    "weight_limit": _INT,
    "leader_id": _INT,
    "cohesion_gain": _FLOAT,
    "sep_radius": _FLOAT,
    "align_gain": _FLOAT,
    "cap_leader_speed": _BOOL,
    "deploy_jitter": _FLOAT,
    "seed": _INT,
    "max_ticks": _INT,
    "swarm_arrive_radius": _FLOAT,
    "post_arrival_ticks": _INT,
}
_OPTIONAL = {"r_travel", "weight_limit", "leader_id"}

assert set(_KINDS) == {f.name for f in dataclasses.fields(SwarmConfig)}


def _parse_value(key: str, raw: str, line: int):
    kind = _KINDS[key]
    text = raw.strip()
    if key in _OPTIONAL and text.lower() in ("", "none"):
        return None
    try:
        if kind == _INT:
            return int(text)
        if kind == _FLOAT:
            v = float(text)
            if not math.isfinite(v):
                raise ValueError("not finite")
            return v
        if kind == _BOOL:
            low = text.lower()
            if low in ("true", "yes", "1"):
                return True
            if low in ("false", "no", "0"):
                return False
            raise ValueError("expected true/false")
        parts = [float(p) for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected 3 comma-separated numbers, got {len(parts)}")
        return Vec3(*parts)
    except ValueError as exc:
        raise ConfigError(f"bad {kind} value {text!r} ({exc})", field=key, line=line) from None


def parse_config_text(text: str) -> SwarmConfig:
    values: dict = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"expected 'key = value', got {body!r}", line=lineno)
        key, val = (s.strip() for s in body.split("=", 1))
        if key not in _KINDS:
            raise ConfigError("unknown key", field=key, line=lineno)
        if key in values:
            raise ConfigError(f"duplicate key (first set on line {lines[key]})", field=key, line=lineno)
        values[key] = _parse_value(key, val, lineno)
        lines[key] = lineno
    try:
        return SwarmConfig(**values)
    except ConfigError as exc:
        raise ConfigError(exc.message, field=exc.field, line=lines.get(exc.field)) from None


def parse_config(path: PathLike) -> SwarmConfig:
    """Read a ``key = value`` config file; omitted keys take their defaults."""
    return parse_config_text(Path(path).read_text())


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ", ".join(repr(float(c)) for c in v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def format_config(cfg: SwarmConfig) -> str:
    out = []
    for f in dataclasses.fields(cfg):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        out.append(f"{f.name} = {_fmt(v)}")
    return "\n".join(out) + "\n"


def write_config(cfg: SwarmConfig, path: PathLike) -> None:
    Path(path).write_text(format_config(cfg))


def _record_to_json(rec: TickRecord) -> dict:
    return {
        "tick": rec.tick,
        "phase": rec.phase.value,
        "uavs": [
            {"id": i, "pos": list(p), "vel": list(v), "weight": w, "leader": lead}
            for i, (p, v, w, lead) in enumerate(zip(rec.positions, rec.velocities, rec.weights, rec.leaders))
        ],
        "edges": [list(e) for e in rec.edges],
        "range_used": rec.range_used,
        "connected": rec.connected,
        "min_pairwise_distance": rec.min_pairwise_distance,
        "out_of_region": rec.out_of_region,
    }


def _record_from_json(obj: dict) -> TickRecord:
    uavs = sorted(obj["uavs"], key=lambda u: u["id"])
    return TickRecord(
        tick=obj["tick"],
        phase=Phase(obj["phase"]),
        positions=tuple(Vec3.of(u["pos"]) for u in uavs),
        velocities=tuple(Vec3.of(u["vel"]) for u in uavs),
        weights=tuple(u["weight"] for u in uavs),
        leaders=tuple(u["leader"] for u in uavs),
        edges=tuple((a, b) for a, b in obj["edges"]),
        range_used=obj["range_used"],
        connected=obj["connected"],
        min_pairwise_distance=obj["min_pairwise_distance"],
        out_of_region=obj["out_of_region"],
    )


def trace_lines(result: SimResult) -> Iterable[str]:
    for rec in result.trace:
        yield json.dumps(_record_to_json(rec), allow_nan=False, separators=(",", ":"))


def emit_trace(result: SimResult, path: PathLike) -> None:
    with open(path, "w") as fh:
        for line in trace_lines(result):
            fh.write(line + "\n")


def read_trace(path: PathLike) -> list[TickRecord]:
    with open(path) as fh:
        return [_record_from_json(json.loads(line)) for line in fh if line.strip()]


RUN_HEADER = ["n", "replicate", "seed", "arrival_tick", "connectivity_fraction", "min_pairwise_distance"]
AGG_HEADER = ["n", "mean_arrival", "overhead_pct"]


def _cell(v) -> str:
    if v is None:
        return ""
    return repr(v) if isinstance(v, float) else str(v)


def _opt(text: str, kind):
    return None if text == "" else kind(text)


def format_summary(summary: ExperimentSummary) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RUN_HEADER)
    for r in summary.runs:
        w.writerow([_cell(getattr(r, k)) for k in RUN_HEADER])
    w.writerow([])
    w.writerow(AGG_HEADER)
    for a in summary.aggregates:
        w.writerow([_cell(a.n), _cell(a.mean_arrival), _cell(a.overhead_pct)])
    return buf.getvalue()


def emit_summary(summary: ExperimentSummary, path: PathLike) -> None:
    Path(path).write_text(format_summary(summary))


def read_summary(path: PathLike, theoretical: Optional[float] = None) -> ExperimentSummary:
    """Parse a summary CSV back into an :class:`ExperimentSummary`.

    The CSV does not store the baseline; pass ``theoretical`` unless the run
    used the default deployment and destination.
    """
    if theoretical is None:
        d = SwarmConfig()
        theoretical = theoretical_time(d.d1, d.d2, d.vel_leader)
    rows = list(csv.reader(Path(path).read_text().splitlines()))
    if not rows or rows[0] != RUN_HEADER:
        raise ValueError(f"summary must start with header {','.join(RUN_HEADER)}")
    try:
        split = rows.index([])
    except ValueError:
        split = len(rows)
    runs = tuple(
        RunRecord(
            n=int(r[0]),
            replicate=int(r[1]),
            seed=int(r[2]),
            arrival_tick=_opt(r[3], int),
            connectivity_fraction=float(r[4]),
            min_pairwise_distance=_opt(r[5], float),
        )
        for r in rows[1:split]
    )
    summary = ExperimentSummary(runs=runs, theoretical=theoretical)
    agg = rows[split + 1 :]
    if agg:
        if agg[0] != AGG_HEADER:
            raise ValueError(f"aggregate block must start with header {','.join(AGG_HEADER)}")
        for r in agg[1:]:
            a = summary.aggregate(int(r[0]))
            if (_opt(r[1], float), _opt(r[2], float)) != (a.mean_arrival, a.overhead_pct):
                raise ValueError(f"aggregate row for n={r[0]} disagrees with the per-run rows")
    return summary
