"""Command-line front end: ``cutopt list | validate | run | suite``.

Exit status is 0 on success, 1 when catalog validation fails and 2 for
usage errors (bad flags, invalid function/algorithm combinations).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from . import benchmarks as cat
from .harness import (
    GROUP_BY_DIMENSION,
    SUITE_SETTINGS,
    check_config,
    paper_suite,
    run_experiment,
    suite_config,
)
from .oc import DETERMINISTIC, OcConfig
from .report import ResultTableRow, write_long_trace, write_result, write_table, write_trace

log = logging.getLogger("cutopt")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
DEFAULT_SEED = 42

# Keys accepted by --config and their meaning in terms of CLI dests.
RUN_KEYS = (
    "function", "algo", "runs", "seed", "out", "lam", "grid_n", "samples", "iters",
    "epsilon", "grid_cap", "inertia", "c1", "c2", "particles", "velocity_scale",
    "trace_format", "workers",
)


class UsageError(Exception):
    pass


def cmd_list(args) -> int:
    entries = cat.catalog(args.dim)
    if args.id:
        entries = [e for e in entries if e.id == args.id]
        if not entries:
            raise UsageError(f"unknown function id {args.id!r}")
    json.dump([e.to_dict() for e in entries], sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_validate(args) -> int:
    report = cat.validate_catalog(args.tol_rel, args.tol_abs, samples=args.samples, seed=args.seed)
    for ch in report.checks:
        status = "pass" if ch.passed else "FAIL"
        print(
            f"{ch.id:>4} {ch.name:<22} {status}  max_residual={max(ch.residuals):.3e}"
            f"  allowed={ch.allowed:.1e}  sample_min={ch.sample_min:.6g}"
        )
    print(f"{report.n_passed}/{len(report.checks)} pass")
    errata = [ch for ch in report.checks if "erratum" in ch.notes or "minus sign" in ch.notes]
    if errata:
        print("notes:")
        for ch in errata:
            print(f"  {ch.id} {ch.name}: {ch.notes}")
    if args.json:
        Path(args.json).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_VALIDATION


def _load_config_file(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    if "lambda" in data:
        data["lam"] = data.pop("lambda")
    unknown = sorted(set(data) - set(RUN_KEYS) - {"group", "budget_scale"})
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")
    return data


def _merged(args, keys) -> dict:
    """Config file values overridden by explicitly given flags."""
    settings = _load_config_file(getattr(args, "config", None))
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def build_config(entry: cat.BenchmarkEntry, algo: str, s: dict):
    algo = algo.upper()
    group = GROUP_BY_DIMENSION.get(entry.dimension)
    seed = int(s.get("seed", DEFAULT_SEED))
    if algo in SUITE_SETTINGS.get(group, {}):
        base = suite_config(group, algo, seed=seed)
    elif algo == "OCD":
        # No reference grid setting for 30-D: smallest grid, which the budget check then rejects.
        base = OcConfig(strategy=DETERMINISTIC, samples=2, lam=0.98, max_iterations=2000, seed=seed)
    else:
        raise UsageError(f"unknown algorithm {algo!r}")

    try:
        if algo == "PSO":
            return replace(
                base,
                inertia=s.get("inertia", base.inertia),
                cognitive=s.get("c1", base.cognitive),
                social=s.get("c2", base.social),
                particles=s.get("particles", base.particles),
                iterations=s.get("iters", base.iterations),
                velocity_init_scale=s.get("velocity_scale", base.velocity_init_scale),
            )
        samples_key = "grid_n" if algo == "OCD" else "samples"
        return replace(
            base,
            samples=s.get(samples_key, base.samples),
            lam=s.get("lam", base.lam),
            max_iterations=s.get("iters", base.max_iterations),
            epsilon=s.get("epsilon", base.epsilon),
            grid_cap=s.get("grid_cap", base.grid_cap),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_run(args) -> int:
    s = _merged(args, RUN_KEYS)
    for required in ("function", "algo"):
        if required not in s:
            raise UsageError(f"--{required} is required")
    try:
        entry = cat.get(s["function"])
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    config = build_config(entry, s["algo"], s)
    try:
        check_config(entry, config)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    seed = int(s.get("seed", DEFAULT_SEED))
    runs = int(s.get("runs", 1))
    out = Path(s.get("out", "cutopt-out"))
    result = run_experiment(entry.id, config, runs, master_seed=seed, workers=s.get("workers"))

    out.mkdir(parents=True, exist_ok=True)
    write_table(out / "summary.csv", [ResultTableRow.from_result(result)])
    write_result(out / "runs.json", result)
    if s.get("trace_format", "long") == "long":
        write_long_trace(out / "trace.csv", result.runs)
    else:
        for k, run in enumerate(result.runs):
            write_trace(out / f"trace_run{k:03d}.csv", run.trace)
    print(
        f"{entry.id} {result.algorithm}: median_error={result.median_error!r} "
        f"mean_time={result.mean_time:.4f}s runs={runs} seed={seed} -> {out}"
    )
    return EXIT_OK


def cmd_suite(args) -> int:
    s = _merged(args, ("group", "runs", "seed", "out", "budget_scale", "workers"))
    group = s.get("group")
    if group not in SUITE_SETTINGS:
        raise UsageError(f"--group must be one of {', '.join(SUITE_SETTINGS)}")
    seed = int(s.get("seed", DEFAULT_SEED))
    specs = paper_suite(group, runs=s.get("runs"), budget_scale=float(s.get("budget_scale", 1.0)), seed=seed)
    out = Path(s.get("out", f"cutopt-suite-{group}"))
    (out / "traces").mkdir(parents=True, exist_ok=True)
    (out / "runs").mkdir(parents=True, exist_ok=True)

    results = []
    for spec in specs:
        result = run_experiment(spec.function_id, spec.config, spec.runs, master_seed=seed, workers=s.get("workers"))
        log.info("%s %s median_error=%r", spec.function_id, spec.algorithm, result.median_error)
        print(f"{spec.function_id:>4} {spec.algorithm}  median_error={result.median_error:.4e}  "
              f"mean_time={result.mean_time:.4f}s", flush=True)
        results.append(result)

    write_table(out / "table.csv", [ResultTableRow.from_result(r) for r in results])
    for r in results:
        stem = f"{r.function_id}_{r.algorithm}"
        write_trace(out / "traces" / f"{stem}.csv", r.median_trace)
        write_result(out / "runs" / f"{stem}.json", r)
    print(f"{len(results)} experiments, seed={seed} -> {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutopt", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="dump the benchmark catalog as JSON")
    p.add_argument("--dim", type=int)
    p.add_argument("--id")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("validate", help="check tabulated minima of all catalog entries")
    p.add_argument("--tol-abs", type=float, default=1e-9)
    p.add_argument("--tol-rel", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=10_000, help="uniform samples for the floor check")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", help="also write the report as JSON to this path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="repeated runs of one algorithm on one function")
    p.add_argument("--config", help="JSON file with default flag values")
    p.add_argument("--function")
    p.add_argument("--algo", type=str.lower, choices=["ocd", "ocs", "pso"])
    p.add_argument("--runs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--grid-n", type=int, help="OCD points per axis")
    p.add_argument("--samples", type=int, help="OCS points per iteration")
    p.add_argument("--iters", type=int)
    p.add_argument("--epsilon", type=float, help="OC width stop (0 disables)")
    p.add_argument("--grid-cap", type=int)
    p.add_argument("--inertia", type=float)
    p.add_argument("--c1", type=float)
    p.add_argument("--c2", type=float)
    p.add_argument("--particles", type=int)
    p.add_argument("--velocity-scale", type=float)
    p.add_argument("--trace-format", choices=["long", "per-run"])
    p.add_argument("--workers", type=int, help="worker threads (default: $CUTOPT_THREADS, 0 = auto)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("suite", help="run the reference experiment grid of one dimension group")
    p.add_argument("--config", help="JSON file with default flag values")
    p.add_argument("--group", choices=sorted(SUITE_SETTINGS))
    p.add_argument("--runs", type=int)
    p.add_argument("--budget-scale", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
