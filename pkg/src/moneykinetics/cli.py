"""Command-line harness.

    moneykinetics simulate <scenario> --out DIR [--seed N] [--transactions N]
    moneykinetics analyze-energy <csv...> --out DIR
    moneykinetics temperatures <scenario>

simulate writes frame_<k>.csv (bin_lo,count) per snapshot, trace.csv,
and manifest.json into the output directory.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from collections import defaultdict
from pathlib import Path

from . import __version__
from .banking import theoretical_temperatures
from .energy import (exponential_distance, load_energy_table, weighted_lorenz,
                     world_average)
from .engine import ScenarioConfig, SimulationTrace, run
from .errors import MoneyKineticsError
from .scenario import parse_scenario
from .stats import stationarity_reached

STATIONARITY_EPSILON = 0.02
STATIONARITY_WINDOW = 3


def _config_echo(config: ScenarioConfig) -> dict:
    echo = dataclasses.asdict(config)
    echo["rule"] = {"type": type(config.rule).__name__, **dataclasses.asdict(config.rule)}
    echo["boundary"] = {"type": type(config.boundary).__name__,
                        **dataclasses.asdict(config.boundary)}
    return echo


def _summary_dict(summary) -> dict:
    out = {
        "total_cents": summary.total,
        "mean_cents": summary.mean,
        "variance": summary.variance,
        "skewness": summary.skewness,
        "min_cents": summary.min,
        "max_cents": summary.max,
        "entropy_per_agent_nats": summary.entropy_per_agent,
        "fit_temperature_cents": summary.fit.temperature if summary.fit else None,
        "fit_degenerate": summary.fit.degenerate if summary.fit else None,
        "ks": summary.ks,
        "t_plus_cents": summary.two_sided.t_plus if summary.two_sided else None,
        "t_minus_cents": summary.two_sided.t_minus if summary.two_sided else None,
    }
    return out


def write_outputs(trace: SimulationTrace, out_dir: Path) -> Path:
    """Write frame files, the per-snapshot trace, and the manifest."""
    out_dir.mkdir(parents=True, exist_ok=True)
    frame_files = []
    for k, snap in enumerate(trace.snapshots):
        hist = snap.summary.histogram
        frame = out_dir / f"frame_{k}.csv"
        with frame.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write("bin_lo,count\n")
            for i, count in enumerate(hist.counts):
                fh.write(f"{hist.origin + i * hist.bin_width},{count}\n")
        frame_files.append(frame.name)

    with (out_dir / "trace.csv").open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("snapshot,transactions,mean,variance,skewness,entropy,fit_T,ks\n")
        for k, snap in enumerate(trace.snapshots):
            s = snap.summary
            fit_t = s.fit.temperature if s.fit else float("nan")
            ks = s.ks if s.ks is not None else float("nan")
            fh.write(f"{k},{snap.transactions},{s.mean:.6f},{s.variance:.6f},"
                     f"{s.skewness:.6f},{s.entropy_per_agent:.6f},{fit_t:.6f},{ks:.6f}\n")

    config = trace.config
    temps = theoretical_temperatures(config.boundary, config.monetary_base(), config.n_agents)
    stationary = None
    if len(trace.snapshots) >= STATIONARITY_WINDOW + 1:
        stationary = stationarity_reached(trace.histograms(), STATIONARITY_EPSILON,
                                          STATIONARITY_WINDOW)
    manifest = {
        "code_version": __version__,
        "rng_algorithm": trace.rng_algorithm,
        "seed": config.seed,
        "config": _config_echo(config),
        "frames": frame_files,
        "theoretical_temperatures": {
            "t_cents": temps.t, "t_plus_cents": temps.t_plus,
            "t_minus_cents": temps.t_minus, "stationary_regime": temps.stationary,
        },
        "stationary": stationary,
        "final_summary": _summary_dict(trace.final()),
        "applied_transactions": trace.applied,
        "blocked_transactions": trace.blocked,
        "bank": {"monetary_base_cents": trace.bank.monetary_base,
                 "total_loans_cents": trace.bank.total_loans,
                 "equity_cents": trace.bank.equity},
        "events": len(trace.events),
        "wall_clock_seconds": trace.elapsed_seconds,
    }
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
    return manifest_path


def _cmd_simulate(args) -> int:
    config = parse_scenario(args.scenario)
    if args.seed is not None or args.transactions is not None:
        config = dataclasses.replace(
            config,
            seed=args.seed if args.seed is not None else config.seed,
            n_transactions=args.transactions if args.transactions is not None
            else config.n_transactions,
        )
        config.validate()
    trace = run(config)
    manifest_path = write_outputs(trace, Path(args.out))
    final = trace.final()
    print(f"wrote {manifest_path}")
    print(f"final mean={final.mean / 100:.2f}$ entropy={final.entropy_per_agent:.4f}"
          + (f" fit_T={final.fit.temperature / 100:.2f}$" if final.fit else "")
          + (f" ks={final.ks:.4f}" if final.ks is not None else ""))
    return 0


def _cmd_temperatures(args) -> int:
    config = parse_scenario(args.scenario)
    temps = theoretical_temperatures(config.boundary, config.monetary_base(),
                                     config.n_agents)
    if not temps.stationary:
        print("no stationary distribution for this boundary policy")
    if temps.t is not None:
        print(f"T = {temps.t / 100:.2f}$")
    if temps.t_plus is not None:
        print(f"T+ = {temps.t_plus / 100:.2f}$")
    if temps.t_minus is not None:
        print(f"T- = {temps.t_minus / 100:.2f}$")
    return 0


def _cmd_analyze_energy(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_year = defaultdict(list)
    for path in args.csv:
        for record in load_energy_table(Path(path)):
            by_year[record.year].append(record)

    rows = []
    for year in sorted(by_year):
        records = by_year[year]
        curve = weighted_lorenz(records)
        lorenz_path = out_dir / f"lorenz_{year}.csv"
        with lorenz_path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write("x,y\n")
            for x, y in zip(curve.x, curve.y):
                fh.write(f"{x:.9f},{y:.9f}\n")
        rows.append((year, world_average(records), curve.gini,
                     exponential_distance(records)))

    with (out_dir / "energy_summary.csv").open("w", encoding="utf-8", newline="\n") as fh:
        fh.write("year,world_mean_kw,gini,exponential_distance\n")
        for year, mean, g, dist in rows:
            fh.write(f"{year},{mean:.6f},{g:.6f},{dist:.6f}\n")

    print(f"{'year':>6} {'mean kW':>10} {'Gini':>8} {'exp dist':>9}")
    for year, mean, g, dist in rows:
        print(f"{year:>6} {mean:>10.3f} {g:>8.4f} {dist:>9.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moneykinetics",
                                     description="Random money-transfer simulations "
                                                 "and inequality analytics")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a scenario file")
    p_sim.add_argument("scenario")
    p_sim.add_argument("--out", required=True, help="output directory")
    p_sim.add_argument("--seed", type=int, default=None, help="override the file's seed")
    p_sim.add_argument("--transactions", type=int, default=None,
                       help="override the file's transaction count")
    p_sim.set_defaults(func=_cmd_simulate)

    p_temp = sub.add_parser("temperatures", help="print theoretical temperatures")
    p_temp.add_argument("scenario")
    p_temp.set_defaults(func=_cmd_temperatures)

    p_energy = sub.add_parser("analyze-energy", help="analyze energy CSV tables")
    p_energy.add_argument("csv", nargs="+")
    p_energy.add_argument("--out", required=True, help="output directory")
    p_energy.set_defaults(func=_cmd_analyze_energy)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MoneyKineticsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
