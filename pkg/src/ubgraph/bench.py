"""Scaling experiments over the two graph constructions.

Each experiment varies one parameter (trace length, trace count, or the
share of uncertain timestamps), generates a fresh seeded log per point,
and times whole-log graph construction for both algorithms.  Per point
the median of r repetitions is kept, after one untimed warm-up run that
also absorbs any one-off compilation cost; repetitions are interleaved
across points so machine-speed drift does not bias the points measured
last.  Log generation is never inside a timer, and every timed run ends
with an edge-set comparison between the two algorithms; a mismatch
aborts the experiment.
"""

from __future__ import annotations

import gc
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import median
from typing import Callable, Mapping, Sequence, TextIO

import numpy as np

from .graph import BehaviorGraph, build_baseline, build_sweep
from .loggen import GenerationSpec, UncertainLog, generate_certain_log, inject_time_uncertainty

ALGORITHMS: dict[str, Callable] = {
    "baseline": build_baseline,
    "sweep": build_sweep,
}


class EquivalenceError(AssertionError):
    """The two constructions disagreed on a benchmark log."""


@dataclass(frozen=True)
class BenchmarkResult:
    """Median seconds per (parameter value, algorithm)."""

    parameter: str
    values: tuple[float, ...]
    times: Mapping[str, tuple[float, ...]]
    repetitions: int
    seed: int


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares slope of log(time) against log(parameter value)."""

    algorithm: str
    exponent: float
    residual: float


def _check_equivalent(
    baseline: Sequence[BehaviorGraph], sweep: Sequence[BehaviorGraph]
) -> None:
    for left, right in zip(baseline, sweep):
        if left.edges != right.edges:
            only_left = sorted(left.edges - right.edges)
            only_right = sorted(right.edges - left.edges)
            raise EquivalenceError(
                f"constructions disagree on case {left.case_id!r}: baseline-only "
                f"{only_left[:5]}, sweep-only {only_right[:5]}"
            )


def _timed_build(log: UncertainLog, build: Callable) -> tuple[float, list[BehaviorGraph]]:
    # collector pauses would otherwise land on arbitrary runs and swamp
    # the fast algorithm's measurements; start from a collected heap,
    # then keep the collector off while the clock runs
    graphs: list[BehaviorGraph] = []
    was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        for trace in log.traces:
            graphs.append(build(trace))
        elapsed = time.perf_counter() - start
    finally:
        if was_enabled:
            gc.enable()
    return elapsed, graphs


def _experiment(
    parameter: str,
    values: Sequence[float],
    make_log: Callable[[float], UncertainLog],
    repetitions: int,
    seed: int,
) -> BenchmarkResult:
    if not values:
        raise ValueError(f"no {parameter} values given")
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    logs = [make_log(value) for value in values]
    # untimed warm-up, also gating equivalence before any timing starts;
    # released right away so timed runs see a similar heap at every point
    for log in logs:
        warm = {name: [build(trace) for trace in log.traces] for name, build in ALGORITHMS.items()}
        _check_equivalent(warm["baseline"], warm["sweep"])
        del warm
    samples: dict[str, list[list[float]]] = {
        name: [[] for _ in values] for name in ALGORITHMS
    }
    # repetitions are interleaved across the points so slow drift in
    # machine speed spreads over all of them instead of biasing the
    # points measured last; cross-point ratios are what gets reported
    for _ in range(repetitions):
        for index, log in enumerate(logs):
            run: dict[str, list[BehaviorGraph]] = {}
            for name, build in ALGORITHMS.items():
                seconds, graphs = _timed_build(log, build)
                samples[name][index].append(seconds)
                run[name] = graphs
            _check_equivalent(run["baseline"], run["sweep"])
    return BenchmarkResult(
        parameter=parameter,
        values=tuple(float(v) for v in values),
        times={
            name: tuple(median(point) for point in per_point)
            for name, per_point in samples.items()
        },
        repetitions=repetitions,
        seed=seed,
    )


def run_length_experiment(
    lengths: Sequence[int],
    n_traces: int = 50,
    p_time: float = 0.4,
    repetitions: int = 5,
    seed: int = 0,
) -> BenchmarkResult:
    """Construction time as the number of events per trace grows."""

    def make_log(length: float) -> UncertainLog:
        spec = GenerationSpec(n_traces=n_traces, trace_length=int(length), seed=seed)
        return inject_time_uncertainty(generate_certain_log(spec), p_time, seed)

    return _experiment("length", lengths, make_log, repetitions, seed)


def run_traces_experiment(
    trace_counts: Sequence[int],
    trace_length: int = 50,
    p_time: float = 0.4,
    repetitions: int = 5,
    seed: int = 0,
) -> BenchmarkResult:
    """Construction time as the number of traces grows (length fixed)."""

    def make_log(count: float) -> UncertainLog:
        spec = GenerationSpec(n_traces=int(count), trace_length=trace_length, seed=seed)
        return inject_time_uncertainty(generate_certain_log(spec), p_time, seed)

    return _experiment("traces", trace_counts, make_log, repetitions, seed)


def run_uncertainty_experiment(
    shares: Sequence[float],
    n_traces: int = 100,
    trace_length: int = 100,
    repetitions: int = 5,
    seed: int = 0,
) -> BenchmarkResult:
    """Construction time as the share of uncertain timestamps grows."""

    def make_log(p: float) -> UncertainLog:
        spec = GenerationSpec(n_traces=n_traces, trace_length=trace_length, seed=seed)
        return inject_time_uncertainty(generate_certain_log(spec), p, seed)

    return _experiment("uncertainty", shares, make_log, repetitions, seed)


def fit_scaling_exponent(result: BenchmarkResult, algorithm: str) -> ScalingFit:
    """Fit time ~ value**exponent for one algorithm's measurements.

    Needs at least three strictly increasing positive parameter values.
    The residual is the sum of squared errors in log-log space.
    """
    if algorithm not in result.times:
        raise ValueError(f"no measurements for algorithm {algorithm!r}")
    values = np.asarray(result.values, dtype=float)
    seconds = np.asarray(result.times[algorithm], dtype=float)
    if values.size < 3:
        raise ValueError("exponent fit needs at least 3 points")
    if not (np.all(values > 0) and np.all(np.diff(values) > 0)):
        raise ValueError("exponent fit needs strictly increasing positive values")
    if not np.all(seconds > 0):
        raise ValueError("exponent fit needs positive timings")
    coefficients, residuals, *_ = np.polyfit(
        np.log(values), np.log(seconds), 1, full=True
    )
    residual = float(residuals[0]) if residuals.size else 0.0
    return ScalingFit(algorithm=algorithm, exponent=float(coefficients[0]), residual=residual)


def format_summary(result: BenchmarkResult, fits: Sequence[ScalingFit]) -> str:
    """Human-readable experiment summary with fitted exponents."""
    lines = [
        f"{result.parameter} experiment, median of {result.repetitions} "
        f"repetitions, seed {result.seed}"
    ]
    for i, value in enumerate(result.values):
        per_algorithm = ", ".join(
            f"{name} {result.times[name][i]:.6f}s" for name in sorted(result.times)
        )
        lines.append(f"  {result.parameter}={value:g}: {per_algorithm}")
    for fit in fits:
        lines.append(
            f"  {fit.algorithm}: fitted exponent {fit.exponent:.2f} "
            f"(residual {fit.residual:.3g})"
        )
    return "\n".join(lines)


def emit_report(
    result: BenchmarkResult,
    fits: Sequence[ScalingFit],
    destination: str | Path,
    summary_stream: TextIO | None = None,
) -> int:
    """Write the per-point CSV and print the summary; returns CSV bytes."""
    rows = ["param,value,algorithm,seconds"]
    for name in sorted(result.times):
        for value, seconds in zip(result.values, result.times[name]):
            rows.append(f"{result.parameter},{value:g},{name},{seconds!r}")
    data = ("\n".join(rows) + "\n").encode("utf-8")
    Path(destination).write_bytes(data)
    stream = summary_stream if summary_stream is not None else sys.stdout
    print(format_summary(result, fits), file=stream)
    return len(data)
