"""Seeded synthetic log generation and uncertainty injection.

Generation happens in two steps: build a fully certain log with evenly
spaced timestamps, then inject the wanted kinds of uncertainty into a
fixed share of each trace's events.  All randomness flows through
per-trace substreams keyed by (seed, stage, trace index), so results
are reproducible and independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import UncertainEvent, UncertainLog, UncertainTrace

STRIDE_MS = 1000

# stage tags keep the substreams of the four randomized steps disjoint
_STAGE_GENERATE = 0
_STAGE_TIME = 1
_STAGE_ACTIVITY = 2
_STAGE_INDETERMINATE = 3


@dataclass(frozen=True)
class GenerationSpec:
    """Parameters for one synthetic log."""

    n_traces: int
    trace_length: int
    alphabet_size: int = 26
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_traces < 1:
            raise ValueError("n_traces must be at least 1")
        if self.trace_length < 1:
            raise ValueError("trace_length must be at least 1")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def activity_label(index: int) -> str:
    """Label of alphabet position ``index``: a..z, then act26, act27, ..."""
    if index < 26:
        return chr(ord("a") + index)
    return f"act{index}"


def _rng(seed: int, stage: int, trace_index: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence((seed, stage, trace_index)))
    )


def _share(p: float, count: int) -> int:
    # floor with a tiny guard against p*count landing just below an integer
    return int(math.floor(p * count + 1e-9))


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")


def generate_certain_log(spec: GenerationSpec) -> UncertainLog:
    """A log of ``n_traces`` traces, each with ``trace_length`` events.

    Event k of a trace (1-based) happens at exactly k * 1000 ms with a
    single activity label drawn uniformly from the alphabet.  Every
    event is determinate.  Event ids are "<case>#<k>".
    """
    traces = []
    for t in range(spec.n_traces):
        case_id = f"c{t}"
        rng = _rng(spec.seed, _STAGE_GENERATE, t)
        picks = rng.integers(0, spec.alphabet_size, size=spec.trace_length)
        events = tuple(
            UncertainEvent(
                event_id=f"{case_id}#{k + 1}",
                activities=frozenset({activity_label(int(picks[k]))}),
                t_min=(k + 1) * STRIDE_MS,
                t_max=(k + 1) * STRIDE_MS,
            )
            for k in range(spec.trace_length)
        )
        traces.append(UncertainTrace(case_id=case_id, events=events))
    return UncertainLog(traces=tuple(traces))


def _choose(rng: np.random.Generator, count: int, share: int) -> np.ndarray:
    if share == 0:
        return np.empty(0, dtype=np.int64)
    return rng.choice(count, size=share, replace=False)


def inject_time_uncertainty(
    log: UncertainLog, p: float, seed: int, stride: int = STRIDE_MS
) -> UncertainLog:
    """Widen the timestamps of floor(p * length) events per trace.

    A chosen event at instant t gets the interval [t - 1.5 * stride,
    t + 1.5 * stride], guaranteeing overlap with both neighbors of an
    evenly strided trace.  Other attributes are untouched.
    """
    _check_probability(p)
    half_width = int(1.5 * stride)
    traces = []
    for t, trace in enumerate(log.traces):
        rng = _rng(seed, _STAGE_TIME, t)
        chosen = set(_choose(rng, len(trace.events), _share(p, len(trace.events))).tolist())
        events = []
        for i, event in enumerate(trace.events):
            if i in chosen:
                centre = event.t_min
                event = UncertainEvent(
                    event_id=event.event_id,
                    activities=event.activities,
                    t_min=centre - half_width,
                    t_max=centre + half_width,
                    determinate=event.determinate,
                )
            events.append(event)
        traces.append(UncertainTrace(case_id=trace.case_id, events=tuple(events)))
    return UncertainLog(traces=tuple(traces))


def inject_activity_uncertainty(
    log: UncertainLog,
    p: float,
    seed: int,
    extra_labels: int = 1,
    alphabet_size: int = 26,
) -> UncertainLog:
    """Add ``extra_labels`` distinct new labels to chosen events.

    floor(p * length) events per trace are chosen; each gains labels it
    did not already carry, drawn uniformly from the alphabet (extended
    past ``alphabet_size`` if an event already holds most of it).
    """
    _check_probability(p)
    if extra_labels < 1:
        raise ValueError("extra_labels must be at least 1")
    traces = []
    for t, trace in enumerate(log.traces):
        rng = _rng(seed, _STAGE_ACTIVITY, t)
        chosen = set(_choose(rng, len(trace.events), _share(p, len(trace.events))).tolist())
        events = []
        for i, event in enumerate(trace.events):
            if i in chosen:
                pool = [
                    label
                    for label in (activity_label(j) for j in range(alphabet_size))
                    if label not in event.activities
                ]
                j = alphabet_size
                while len(pool) < extra_labels:
                    label = activity_label(j)
                    if label not in event.activities:
                        pool.append(label)
                    j += 1
                added = rng.choice(len(pool), size=extra_labels, replace=False)
                event = UncertainEvent(
                    event_id=event.event_id,
                    activities=event.activities | {pool[int(a)] for a in added},
                    t_min=event.t_min,
                    t_max=event.t_max,
                    determinate=event.determinate,
                )
            events.append(event)
        traces.append(UncertainTrace(case_id=trace.case_id, events=tuple(events)))
    return UncertainLog(traces=tuple(traces))


def inject_indeterminacy(log: UncertainLog, p: float, seed: int) -> UncertainLog:
    """Mark floor(p * length) events per trace as possibly unrecorded."""
    _check_probability(p)
    traces = []
    for t, trace in enumerate(log.traces):
        rng = _rng(seed, _STAGE_INDETERMINATE, t)
        chosen = set(_choose(rng, len(trace.events), _share(p, len(trace.events))).tolist())
        events = []
        for i, event in enumerate(trace.events):
            if i in chosen:
                event = UncertainEvent(
                    event_id=event.event_id,
                    activities=event.activities,
                    t_min=event.t_min,
                    t_max=event.t_max,
                    determinate=False,
                )
            events.append(event)
        traces.append(UncertainTrace(case_id=trace.case_id, events=tuple(events)))
    return UncertainLog(traces=tuple(traces))
