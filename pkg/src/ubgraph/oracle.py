"""Brute-force reference semantics for small traces.

Everything here enumerates: orderings, realizations, directly-follows
counts.  The implementations are deliberately simple and kept separate
from the graph kernels so the two routes (enumeration vs construction)
can be checked against each other.  Size guards stop the factorial
blowup early; costs beyond them are not supported.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from math import prod

from .model import UncertainEvent, UncertainTrace, ensure_valid, precedes

MAX_EXTENSION_EVENTS = 10
MAX_REALIZATION_EVENTS = 8
MAX_REALIZATIONS = 1_000_000

# A realization fixes one consistent reading of the trace: which events
# happened, in what order, under which label.  It is stored as a tuple
# of (event id, label) pairs in execution order.
Realization = tuple[tuple[str, str], ...]


class SizeLimitError(ValueError):
    """Raised when a trace is too large for exhaustive enumeration."""


def covering_relation(trace: UncertainTrace) -> frozenset[tuple[str, str]]:
    """Pairs (v, w) with v before w and nothing certainly in between.

    Direct evaluation of the definition, cubic in the trace length.
    This is the reference edge set of the behavior graph.
    """
    ensure_valid(trace)
    events = trace.events
    return frozenset(
        (v.event_id, w.event_id)
        for v in events
        for w in events
        if precedes(v, w)
        and not any(precedes(v, u) and precedes(u, w) for u in events)
    )


def _predecessor_map(events: tuple[UncertainEvent, ...]) -> dict[str, set[str]]:
    return {
        w.event_id: {v.event_id for v in events if precedes(v, w)}
        for w in events
    }


def _extensions(events: tuple[UncertainEvent, ...]) -> set[tuple[str, ...]]:
    """All orderings of ``events`` consistent with the precedence relation."""
    predecessors = _predecessor_map(events)
    remaining = {e.event_id for e in events}
    sequence: list[str] = []
    found: set[tuple[str, ...]] = set()

    def grow() -> None:
        if not remaining:
            found.add(tuple(sequence))
            return
        for event_id in sorted(remaining):
            if predecessors[event_id] & remaining:
                continue  # an unplaced event must still come first
            remaining.remove(event_id)
            sequence.append(event_id)
            grow()
            sequence.pop()
            remaining.add(event_id)

    grow()
    return found


def linear_extensions(trace: UncertainTrace) -> frozenset[tuple[str, ...]]:
    """Every total order of the trace's events consistent with precedes.

    Refuses traces longer than MAX_EXTENSION_EVENTS events.
    """
    ensure_valid(trace)
    if len(trace.events) > MAX_EXTENSION_EVENTS:
        raise SizeLimitError(
            f"trace {trace.case_id!r} has {len(trace.events)} events; "
            f"linear extension enumeration is limited to {MAX_EXTENSION_EVENTS}"
        )
    return frozenset(_extensions(trace.events))


def possible_immediate_successor(trace: UncertainTrace, v: str, w: str) -> bool:
    """True when some consistent ordering places w directly after v.

    Note this is weaker than certain precedence: two events with
    overlapping intervals can each directly follow the other.
    """
    known = {e.event_id for e in trace.events}
    for event_id in (v, w):
        if event_id not in known:
            raise ValueError(f"unknown event id {event_id!r}")
    for sequence in linear_extensions(trace):
        for a, b in zip(sequence, sequence[1:]):
            if a == v and b == w:
                return True
    return False


def enumerate_realizations(trace: UncertainTrace) -> frozenset[Realization]:
    """Every (inclusion, order, labeling) reading the trace allows.

    Determinate events appear in every realization; indeterminate ones
    in a subset.  Refuses traces beyond MAX_REALIZATION_EVENTS events or
    whose realization count bound exceeds MAX_REALIZATIONS.
    """
    ensure_valid(trace)
    events = trace.events
    if len(events) > MAX_REALIZATION_EVENTS:
        raise SizeLimitError(
            f"trace {trace.case_id!r} has {len(events)} events; realization "
            f"enumeration is limited to {MAX_REALIZATION_EVENTS}"
        )
    extensions_all = _extensions(events)
    indeterminate = [e for e in events if not e.determinate]
    bound = (
        prod(len(e.activities) for e in events)
        * 2 ** len(indeterminate)
        * max(len(extensions_all), 1)
    )
    if bound > MAX_REALIZATIONS:
        raise SizeLimitError(
            f"trace {trace.case_id!r} admits up to {bound} realizations; "
            f"enumeration is limited to {MAX_REALIZATIONS}"
        )
    determinate = tuple(e for e in events if e.determinate)
    labels = {e.event_id: sorted(e.activities) for e in events}
    realizations: set[Realization] = set()
    for k in range(len(indeterminate) + 1):
        for dropped in combinations(indeterminate, k):
            kept = tuple(e for e in events if e.determinate or e not in dropped)
            for sequence in _extensions(kept):
                for chosen in product(*(labels[event_id] for event_id in sequence)):
                    realizations.add(tuple(zip(sequence, chosen)))
    # sanity: every realization contains each determinate event exactly once
    required = {e.event_id for e in determinate}
    for realization in realizations:
        ids = [event_id for event_id, _ in realization]
        assert required <= set(ids) and len(ids) == len(set(ids))
    return frozenset(realizations)


def udfg_bounds_trace(trace: UncertainTrace) -> dict[tuple[str, str], tuple[int, int]]:
    """Per-pair bounds on directly-follows counts over all realizations.

    For every ordered label pair (a, b) that is adjacent in at least one
    realization, reports the minimum and maximum number of adjacent
    (a, b) positions any single realization of this trace can contain.
    """
    realizations = enumerate_realizations(trace)
    per_realization: list[Counter[tuple[str, str]]] = []
    pairs: set[tuple[str, str]] = set()
    for realization in realizations:
        sequence = [label for _, label in realization]
        counts = Counter(zip(sequence, sequence[1:]))
        per_realization.append(counts)
        pairs.update(counts)
    return {
        pair: (
            min(counts[pair] for counts in per_realization),
            max(counts[pair] for counts in per_realization),
        )
        for pair in pairs
    }


def udfg_bounds_log(log_traces) -> dict[tuple[str, str], tuple[int, int]]:
    """Log-level bounds: the per-trace bounds summed pairwise.

    A pair absent from a trace contributes (0, 0) for that trace.
    Accepts any iterable of traces (an UncertainLog works).
    """
    totals: dict[tuple[str, str], list[int]] = {}
    for trace in log_traces:
        for pair, (low, high) in udfg_bounds_trace(trace).items():
            bucket = totals.setdefault(pair, [0, 0])
            bucket[0] += low
            bucket[1] += high
    return {pair: (low, high) for pair, (low, high) in totals.items()}
