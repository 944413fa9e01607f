"""Command-line entry point: ``swarmnet run | experiment | check``.

Exit codes: 0 success (the leader arrived, or all checks passed), 2 the
run finished without arrival or a check failed, 1 configuration or I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import warnings
from typing import Optional, Sequence

from .checks import run_checks
from .core import ConfigError, SwarmConfig, Vec3
from .engine import run
from .experiment import run_experiment
from .fileio import emit_summary, emit_trace, parse_config
from .metrics import UnconvergedElectionWarning, connectivity_fraction, overhead_percent, theoretical_time

EXIT_OK, EXIT_ERROR, EXIT_NOT_ARRIVED = 0, 1, 2


def _vec(text: str) -> Vec3:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}")
    return Vec3(*parts)


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


_OVERRIDES = [
    # (flag, config field, type)
    ("--uavs", "n", int),
    ("--range", "r", float),
    ("--travel-range", "r_travel", float),
    ("--side", "l", float),
    ("--deploy", "d1", _vec),
    ("--dest", "d2", _vec),
    ("--leader-vel", "vel_leader", float),
    ("--arrive-eps", "arrive_eps", float),
    ("--sep-radius", "sep_radius", float),
    ("--jitter", "deploy_jitter", float),
    ("--seed", "seed", int),
    ("--max-ticks", "max_ticks", int),
]


def _add_config_flags(p: argparse.ArgumentParser, skip: Sequence[str] = ()) -> None:
    p.add_argument("--config", help="key = value config file")
    for flag, fld, typ in _OVERRIDES:
        if flag not in skip:
            p.add_argument(flag, dest=fld, type=typ, default=None)


def _load_config(args: argparse.Namespace) -> SwarmConfig:
    cfg = parse_config(args.config) if args.config else SwarmConfig()
    changes = {fld: getattr(args, fld) for _, fld, _ in _OVERRIDES if getattr(args, fld, None) is not None}
    return dataclasses.replace(cfg, **changes) if changes else cfg


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    res = run(cfg, trace_stride=args.trace_stride)
    if args.trace:
        emit_trace(res, args.trace)
    theo = theoretical_time(cfg.d1, cfg.d2, cfg.vel_leader)
    print(f"uavs={cfg.n} seed={cfg.seed} theoretical={theo:.2f}")
    if res.arrival_tick is None:
        print(f"not arrived after {res.ticks_run} ticks")
    else:
        print(f"arrival_tick={res.arrival_tick} overhead={overhead_percent(res.arrival_tick, theo):.2f}%")
    print(f"leader={res.leader_id_timeline[-1]} min_pairwise_distance={res.min_pairwise_distance}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", UnconvergedElectionWarning)
        frac = connectivity_fraction(res.trace)
    note = " (no stable leader; whole trace)" if caught else ""
    print(f"connectivity_fraction={frac:.3f}{note} max_speed={res.max_speed:.3g}")
    return EXIT_OK if res.arrived else EXIT_NOT_ARRIVED


def _cmd_experiment(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    summary = run_experiment(cfg, args.uavs, args.replicates, args.seed_base, workers=args.workers)
    if args.summary:
        emit_summary(summary, args.summary)
    print(f"theoretical={summary.theoretical:.2f}")
    print("n  mean_arrival  overhead_pct  arrived  censored  connectivity")
    for a in summary.aggregates:
        mean = "-" if a.mean_arrival is None else f"{a.mean_arrival:.1f}"
        ov = "-" if a.overhead_pct is None else f"{a.overhead_pct:.2f}"
        print(f"{a.n:<3}{mean:>12}{ov:>14}{a.arrived:>9}{a.censored:>10}{a.mean_connectivity:>14.3f}")
    return EXIT_OK if all(a.censored == 0 for a in summary.aggregates) else EXIT_NOT_ARRIVED


def _cmd_check(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    results = run_checks(cfg)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
    return EXIT_OK if all(r.ok for r in results) else EXIT_NOT_ARRIVED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swarmnet", description="Networked UAV swarm simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="simulate one flight")
    _add_config_flags(p)
    p.add_argument("--trace", help="write a JSON Lines trace here")
    p.add_argument("--trace-stride", type=int, default=1)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("experiment", help="replicated arrival-time table")
    _add_config_flags(p, skip=("--uavs", "--seed"))
    p.add_argument("--uavs", type=_int_list, default=[4, 8, 12])
    p.add_argument("--replicates", type=int, default=5)
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--summary", help="write the summary CSV here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("check", help="run the invariant suite")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
