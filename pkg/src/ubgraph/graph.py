"""Behavior graph construction.

A behavior graph makes the partial order information in an uncertain
trace explicit: vertices are events, and there is an edge from v to w
exactly when v certainly precedes w and no third event certainly falls
between them.  In order-theoretic terms it is the transitive reduction
of the precedence relation, which is unique because the relation is
acyclic.

Two constructions are provided with identical output:

* ``build_baseline`` materializes the full precedence relation and then
  reduces it (cubic in the number of events).
* ``build_sweep`` sorts the interval endpoints once and scans forward
  from each endpoint, emitting exactly the reduced edges (quadratic in
  the worst case, near linear on logs whose intervals overlap locally).

Both validate their input and raise InvalidTraceError on violations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Hashable, Iterable, Mapping

import numpy as np

from .backend import ACTIVE as _kernels
from .model import UncertainTrace, ensure_valid


class NotADagError(ValueError):
    """Raised when a graph operation needs acyclic input but got a cycle."""


class EntryKind(IntEnum):
    """Role of one timestamp entry in the sweep; sort rank within a tie."""

    MINIMUM = 0
    CERTAIN = 1
    MAXIMUM = 2


@dataclass(frozen=True)
class TimestampEntry:
    """One endpoint of an event's timestamp interval, as seen by the sweep."""

    time: int
    event_id: str
    kind: EntryKind


@dataclass(frozen=True)
class BehaviorGraph:
    """Vertices are event ids; edges point from earlier to later events.

    ``payload`` maps each event id to its (activity set, determinate
    flag) pair so the graph can be rendered without the source trace.
    """

    case_id: str
    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]
    payload: Mapping[str, tuple[frozenset[str], bool]]


def sweep_entries(trace: UncertainTrace) -> list[TimestampEntry]:
    """The sorted endpoint list driving the sweep construction.

    A certain event contributes one CERTAIN entry at its instant; an
    uncertain event contributes a MINIMUM and a MAXIMUM entry at its
    interval bounds.  Entries are ordered by (time, kind, event id), so
    within one instant minimum endpoints come first and maximum
    endpoints last.
    """
    entries: list[TimestampEntry] = []
    for event in trace.events:
        if event.t_min == event.t_max:
            entries.append(TimestampEntry(event.t_min, event.event_id, EntryKind.CERTAIN))
        else:
            entries.append(TimestampEntry(event.t_min, event.event_id, EntryKind.MINIMUM))
            entries.append(TimestampEntry(event.t_max, event.event_id, EntryKind.MAXIMUM))
    entries.sort(key=lambda entry: (entry.time, entry.kind.value, entry.event_id))
    return entries


def _interval_arrays(trace: UncertainTrace) -> tuple[np.ndarray, np.ndarray]:
    n = len(trace.events)
    t_min = np.fromiter((e.t_min for e in trace.events), dtype=np.int64, count=n)
    t_max = np.fromiter((e.t_max for e in trace.events), dtype=np.int64, count=n)
    return t_min, t_max


def _assemble(trace: UncertainTrace, edge_matrix: np.ndarray) -> BehaviorGraph:
    ids = [e.event_id for e in trace.events]
    payload = {
        e.event_id: (e.activities, e.determinate) for e in trace.events
    }
    rows, cols = np.nonzero(edge_matrix)
    get = ids.__getitem__
    edges = frozenset(zip(map(get, rows.tolist()), map(get, cols.tolist())))
    return BehaviorGraph(
        case_id=trace.case_id,
        vertices=frozenset(ids),
        edges=edges,
        payload=payload,
    )


def build_baseline(trace: UncertainTrace) -> BehaviorGraph:
    """Behavior graph via the full precedence relation.

    Enumerates every ordered pair (quadratic), then strips transitive
    edges (cubic).  Serves as the reference the sweep is checked
    against.
    """
    ensure_valid(trace)
    n = len(trace.events)
    if n <= 1:
        return _assemble(trace, np.zeros((n, n), dtype=np.bool_))
    t_min, t_max = _interval_arrays(trace)
    adjacency = t_max[:, None] < t_min[None, :]
    cyclic, reduced = _kernels.closure_reduce(adjacency)
    if cyclic:
        raise NotADagError("precedence relation is not a DAG")
    return _assemble(trace, reduced)


def _sweep_arrays(trace: UncertainTrace) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sorted (times, kinds, event indices) arrays fed to the sweep kernel."""
    events = trace.events
    n = len(events)
    t_min, t_max = _interval_arrays(trace)
    certain = t_min == t_max
    uncertain_idx = np.flatnonzero(~certain)
    index = np.arange(n, dtype=np.int64)

    times = np.concatenate([t_min, t_max[uncertain_idx]])
    kinds = np.concatenate(
        [
            np.where(certain, EntryKind.CERTAIN.value, EntryKind.MINIMUM.value).astype(np.int8),
            np.full(uncertain_idx.size, EntryKind.MAXIMUM.value, dtype=np.int8),
        ]
    )
    entry_event = np.concatenate([index, uncertain_idx])

    # rank of each event id in ascending string order; final sort tiebreak
    id_rank = np.empty(n, dtype=np.int64)
    by_id = sorted(range(n), key=lambda i: events[i].event_id)
    for rank, i in enumerate(by_id):
        id_rank[i] = rank

    order = np.lexsort((id_rank[entry_event], kinds, times))
    return times[order], kinds[order], entry_event[order]


def build_sweep(trace: UncertainTrace) -> BehaviorGraph:
    """Behavior graph via one sorted scan over interval endpoints.

    Produces exactly the same graph as ``build_baseline`` without ever
    materializing the unreduced precedence relation.
    """
    ensure_valid(trace)
    n = len(trace.events)
    if n <= 1:
        return _assemble(trace, np.zeros((n, n), dtype=np.bool_))
    times, kinds, entry_event = _sweep_arrays(trace)
    edge_matrix = _kernels.sweep_scan(times, kinds, entry_event, n)
    return _assemble(trace, edge_matrix)


def transitive_reduce(
    vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> frozenset[tuple[Hashable, Hashable]]:
    """Transitive reduction of an arbitrary finite DAG.

    Keeps exactly the edges (v, w) for which no other path from v to w
    exists; for a DAG this minimal subrelation is unique.  Raises
    NotADagError when the input contains a cycle (a self-loop counts).
    Edges must mention known vertices.
    """
    order = list(dict.fromkeys(vertices))
    position = {v: i for i, v in enumerate(order)}
    n = len(order)
    adjacency = np.zeros((n, n), dtype=np.bool_)
    for v, w in edges:
        if v not in position or w not in position:
            raise ValueError(f"edge ({v!r}, {w!r}) mentions an unknown vertex")
        adjacency[position[v], position[w]] = True
    cyclic, reduced = _kernels.closure_reduce(adjacency)
    if cyclic:
        raise NotADagError("input graph is not a DAG")
    rows, cols = np.nonzero(reduced)
    get = order.__getitem__
    return frozenset(zip(map(get, rows.tolist()), map(get, cols.tolist())))


def reachable(graph: BehaviorGraph, source: str, target: str) -> bool:
    """True when a directed path (possibly empty) leads source -> target.

    Every vertex reaches itself.  Unknown vertices raise ValueError.
    """
    for vertex in (source, target):
        if vertex not in graph.vertices:
            raise ValueError(f"unknown vertex {vertex!r}")
    if source == target:
        return True
    successors: dict[str, list[str]] = {}
    for v, w in graph.edges:
        successors.setdefault(v, []).append(w)
    frontier = [source]
    seen = {source}
    while frontier:
        vertex = frontier.pop()
        for nxt in successors.get(vertex, ()):
            if nxt == target:
                return True
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return False
