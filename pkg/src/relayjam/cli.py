"""Batch front-end: ``relayjam --config run.cfg --out-dir results/``.

Exit codes: 0 success, 1 configuration error, 2 runtime error (including a
scheme that could not run; the remaining schemes are still written).
"""
from __future__ import annotations

import argparse
import csv
import itertools
import logging
import os
import sys
from dataclasses import replace
from typing import Optional

from . import __version__
from .config import ConfigError, SimulationConfig, format_config, load_config
from .montecarlo import SweepResult, find_crossover, fit_high_power_slope, plateau_value, sweep
from .selection import min_nodes

log = logging.getLogger("relayjam")

CSV_HEADER = ("scheme", "ps_db", "ergodic_rate_bpcu", "rate_stderr", "outage_prob", "trials")
SLOPE_SPAN_DB = 20.0
PLATEAU_SPAN_DB = 10.0


def _num(x) -> str:
    return repr(float(x))


def write_curves(results: dict, path) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for res in results.values():
            for i, p in enumerate(res.ps_db):
                outage = "" if res.outage_prob is None else _num(res.outage_prob[i])
                w.writerow(
                    (res.scheme.value, _num(p), _num(res.ergodic_rate[i]), _num(res.rate_stderr[i]), outage, res.trials)
                )


def summarize(cfg: SimulationConfig, results: dict, errors: dict) -> str:
    top = max(cfg.power_grid)
    slope_win = (top - SLOPE_SPAN_DB, top)
    plateau_win = (top - PLATEAU_SPAN_DB, top)
    out = [f"relayjam {__version__} run summary", ""]
    out.append(f"{'scheme':<10}{'slope [BPCU/dB]':>18}{'plateau [BPCU]':>18}")
    out.append(f"{'':<10}{f'{slope_win[0]:g}-{slope_win[1]:g} dB':>18}{f'{plateau_win[0]:g}-{plateau_win[1]:g} dB':>18}")
    for res in results.values():
        try:
            slope = f"{fit_high_power_slope(res, slope_win):.4f}"
        except ValueError:
            slope = "n/a"
        out.append(f"{res.scheme.value:<10}{slope:>18}{plateau_value(res, plateau_win):>18.4f}")
    out += ["", "crossover points (first sign change of the ergodic-rate difference):"]
    pairs = list(itertools.combinations(results.values(), 2))
    if not pairs:
        out.append("  (need at least two schemes)")
    for a, b in pairs:
        x = find_crossover(a, b)
        where = "none" if x is None else f"{x:.2f} dB"
        out.append(f"  {a.scheme.value} vs {b.scheme.value}: {where}")
    if errors:
        out += ["", "errors:"]
        out += [f"  {s.value}: {msg}" for s, msg in errors.items()]
    out += ["", "configuration:", format_config(cfg)]
    return "\n".join(out)


def run(cfg: SimulationConfig, out_dir: str = ".") -> int:
    """Run the sweep and write curves, summary and (optionally) figures into ``out_dir``."""
    try:
        os.makedirs(out_dir, exist_ok=True)
        topology = cfg.topology()
        errors = {}
        runnable = []
        for s in cfg.schemes:
            if topology.K < min_nodes(s):
                errors[s] = f"needs K >= {min_nodes(s)}, scenario has K={topology.K}"
                log.error("%s skipped: %s", s.value, errors[s])
            else:
                runnable.append(s)
        results: dict[object, SweepResult] = {}
        if runnable:
            log.info("running %d schemes x %d points x %d trials", len(runnable), len(cfg.power_grid), cfg.trials)
            results = sweep(
                runnable,
                topology,
                cfg.power_grid,
                cfg.trials,
                cfg.master_seed,
                power_ratio=cfg.L,
                target_rate=cfg.target_rate,
                allow_equal_jammers=cfg.allow_equal_jammers,
                reciprocal=cfg.reciprocal_channels,
                workers=cfg.workers,
            )
        write_curves(results, os.path.join(out_dir, cfg.curves))
        with open(os.path.join(out_dir, cfg.summary), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(summarize(cfg, results, errors))
        if cfg.figures and results:
            from . import plotting

            stem = f"{cfg.scenario}, K={topology.K}, L={cfg.L:g}"
            plotting.plot_ergodic(results, os.path.join(out_dir, "ergodic.png"), stem)
            if cfg.target_rate is not None:
                plotting.plot_outage(results, os.path.join(out_dir, "outage.png"), f"{stem}, R_T={cfg.target_rate:g}")
            plotting.plot_topology(topology, os.path.join(out_dir, "topology.png"), cfg.scenario)
    except (OSError, ValueError) as exc:
        log.error("run failed: %s", exc)
        return 2
    return 2 if errors else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="relayjam", description="Secrecy-rate Monte-Carlo sweeps for relay/jammer selection schemes."
    )
    p.add_argument("--config", help="configuration file (defaults apply when omitted)")
    p.add_argument("--out-dir", default=".", help="directory for curves.csv, summary.txt and figures")
    p.add_argument("--seed", type=int, help="override master_seed")
    p.add_argument("--trials", type=int, help="override trials per power point")
    p.add_argument("--workers", type=int, help="override worker process count")
    p.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        cfg = load_config(args.config) if args.config else SimulationConfig()
        overrides = {}
        if args.seed is not None:
            if args.seed < 0:
                raise ConfigError("--seed must be >= 0")
            overrides["master_seed"] = args.seed
        if args.trials is not None:
            if args.trials < 1:
                raise ConfigError("--trials must be >= 1")
            overrides["trials"] = args.trials
        if args.workers is not None:
            if args.workers < 1:
                raise ConfigError("--workers must be >= 1")
            overrides["workers"] = args.workers
        if args.no_figures:
            overrides["figures"] = False
        cfg = replace(cfg, **overrides)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"config error: cannot read {args.config}: {exc}", file=sys.stderr)
        return 1
    return run(cfg, args.out_dir)


if __name__ == "__main__":
    sys.exit(main())
