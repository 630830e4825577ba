"""Command line interface.

Subcommands: generate, graph, check, udfg, bench, import-csv.  Data goes
to stdout or the requested files; diagnostics go to stderr.  Exit codes:
0 success, 1 validation or parse errors, 2 internal errors (including a
failed equivalence check).
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from . import bench as bench_mod
from .bench import EquivalenceError, fit_scaling_exponent
from .graph import build_baseline, build_sweep
from .loggen import (
    GenerationSpec,
    generate_certain_log,
    inject_activity_uncertainty,
    inject_indeterminacy,
    inject_time_uncertainty,
)
from .logio import export_dot, import_certain_csv, read_log, write_log
from .oracle import covering_relation, udfg_bounds_log

_BUILDERS = {"baseline": build_baseline, "sweep": build_sweep}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ubgraph",
        description="Behavior graphs for event logs with uncertain event data.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="write a synthetic uncertain log")
    generate.add_argument("--traces", type=int, required=True)
    generate.add_argument("--length", type=int, required=True)
    generate.add_argument("--p-time", type=float, required=True)
    generate.add_argument("--p-activity", type=float, default=0.0)
    generate.add_argument("--p-indeterminate", type=float, default=0.0)
    generate.add_argument("--alphabet", type=int, default=26)
    generate.add_argument("--seed", type=int, required=True)
    generate.add_argument("--out", required=True)
    generate.set_defaults(handler=_cmd_generate)

    graph = commands.add_parser("graph", help="build behavior graphs from a log")
    graph.add_argument("--in", dest="input", required=True)
    graph.add_argument("--algorithm", choices=sorted(_BUILDERS), required=True)
    graph.add_argument("--dot", help="directory for one DOT file per trace")
    graph.set_defaults(handler=_cmd_graph)

    check = commands.add_parser("check", help="verify the two constructions agree")
    check.add_argument("--in", dest="input", required=True)
    check.add_argument("--oracle", action="store_true",
                       help="also compare against brute-force enumeration")
    check.add_argument("--max-oracle-events", type=int, default=8)
    check.set_defaults(handler=_cmd_check)

    udfg = commands.add_parser("udfg", help="directly-follows bounds of a log")
    udfg.add_argument("--in", dest="input", required=True)
    udfg.add_argument("--out", required=True)
    udfg.set_defaults(handler=_cmd_udfg)

    bench = commands.add_parser("bench", help="run a scaling experiment")
    bench.add_argument("mode", choices=["length", "traces", "uncertainty"])
    bench.add_argument("--points", help="comma-separated parameter values")
    bench.add_argument("--traces", type=int)
    bench.add_argument("--length", type=int)
    bench.add_argument("--p-time", type=float)
    bench.add_argument("--reps", type=int, default=5)
    bench.add_argument("--seed", type=int, required=True)
    bench.add_argument("--report", required=True)
    bench.set_defaults(handler=_cmd_bench)

    importer = commands.add_parser("import-csv", help="convert a certain CSV log")
    importer.add_argument("--in", dest="input", required=True)
    importer.add_argument("--case-col", required=True)
    importer.add_argument("--activity-col", required=True)
    importer.add_argument("--time-col", required=True)
    importer.add_argument("--id-col")
    importer.add_argument("--out", required=True)
    importer.set_defaults(handler=_cmd_import_csv)

    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = GenerationSpec(
        n_traces=args.traces,
        trace_length=args.length,
        alphabet_size=args.alphabet,
        seed=args.seed,
    )
    log = generate_certain_log(spec)
    log = inject_time_uncertainty(log, args.p_time, args.seed)
    if args.p_activity:
        log = inject_activity_uncertainty(
            log, args.p_activity, args.seed, alphabet_size=args.alphabet
        )
    if args.p_indeterminate:
        log = inject_indeterminacy(log, args.p_indeterminate, args.seed)
    size = write_log(log, args.out)
    print(f"wrote {len(log)} traces ({size} bytes) to {args.out}")
    return 0


def _safe_name(case_id: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", case_id) or "case"


def _cmd_graph(args: argparse.Namespace) -> int:
    log = read_log(args.input)
    build = _BUILDERS[args.algorithm]
    graphs = [build(trace) for trace in log.traces]
    if args.dot:
        directory = Path(args.dot)
        directory.mkdir(parents=True, exist_ok=True)
        for graph in graphs:
            export_dot(graph, directory / f"{_safe_name(graph.case_id)}.dot")
        print(f"wrote {len(graphs)} DOT files to {directory}")
    else:
        for graph in graphs:
            print(
                f"{graph.case_id}: {len(graph.vertices)} vertices, "
                f"{len(graph.edges)} edges"
            )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    log = read_log(args.input)
    oracle_checked = 0
    for trace in log.traces:
        baseline = build_baseline(trace)
        sweep = build_sweep(trace)
        if baseline.edges != sweep.edges:
            print(
                f"case {trace.case_id!r}: constructions disagree "
                f"(baseline-only {sorted(baseline.edges - sweep.edges)[:5]}, "
                f"sweep-only {sorted(sweep.edges - baseline.edges)[:5]})",
                file=sys.stderr,
            )
            return 2
        if args.oracle and len(trace) <= args.max_oracle_events:
            expected = covering_relation(trace)
            if baseline.edges != expected:
                print(
                    f"case {trace.case_id!r}: constructions disagree with the "
                    f"enumeration oracle",
                    file=sys.stderr,
                )
                return 2
            oracle_checked += 1
    print(f"all {len(log)} traces equivalent")
    if args.oracle:
        print(f"oracle checked {oracle_checked} of {len(log)} traces")
    return 0


def _cmd_udfg(args: argparse.Namespace) -> int:
    log = read_log(args.input)
    bounds = udfg_bounds_log(log)
    rows = ["activity_a,activity_b,min,max"]
    for (a, b), (low, high) in sorted(bounds.items()):
        rows.append(f"{a},{b},{low},{high}")
    data = ("\n".join(rows) + "\n").encode("utf-8")
    Path(args.out).write_bytes(data)
    print(f"wrote {len(bounds)} activity pairs to {args.out}")
    return 0


_BENCH_DEFAULTS = {
    "length": {"points": "64,128,256,512", "traces": 50, "length": None, "p_time": 0.4},
    "traces": {"points": "250,500,1000,2000", "traces": None, "length": 50, "p_time": 0.4},
    "uncertainty": {"points": "0,0.4,0.8", "traces": 100, "length": 100, "p_time": None},
}


def _cmd_bench(args: argparse.Namespace) -> int:
    defaults = _BENCH_DEFAULTS[args.mode]
    points_text = args.points if args.points is not None else defaults["points"]
    try:
        raw_points = [float(part) for part in points_text.split(",") if part.strip()]
    except ValueError:
        print(f"error: bad --points value {points_text!r}", file=sys.stderr)
        return 1
    traces = args.traces if args.traces is not None else defaults["traces"]
    length = args.length if args.length is not None else defaults["length"]
    p_time = args.p_time if args.p_time is not None else defaults["p_time"]
    if args.mode == "length":
        result = bench_mod.run_length_experiment(
            [int(v) for v in raw_points], traces, p_time, args.reps, args.seed
        )
    elif args.mode == "traces":
        result = bench_mod.run_traces_experiment(
            [int(v) for v in raw_points], length, p_time, args.reps, args.seed
        )
    else:
        result = bench_mod.run_uncertainty_experiment(
            raw_points, traces, length, args.reps, args.seed
        )
    fits = []
    if len(result.values) >= 3 and args.mode != "uncertainty":
        fits = [fit_scaling_exponent(result, name) for name in sorted(result.times)]
    bench_mod.emit_report(result, fits, args.report)
    return 0


def _cmd_import_csv(args: argparse.Namespace) -> int:
    log = import_certain_csv(
        args.input,
        case_col=args.case_col,
        activity_col=args.activity_col,
        time_col=args.time_col,
        id_col=args.id_col,
    )
    size = write_log(log, args.out)
    events = sum(len(trace) for trace in log.traces)
    print(f"imported {events} events in {len(log)} traces to {args.out} ({size} bytes)")
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    """Parse and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return 0 if exit_.code in (0, None) else 1
    try:
        return args.handler(args)
    except EquivalenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
