"""Core data model for event logs with uncertain attributes.

An event may carry more than one possible activity label, a timestamp
that is only known to lie inside a closed interval, and a flag that
records whether the event is known to have happened at all.  A trace is
an unordered collection of such events; the partial order between them
is derived from the timestamp intervals, never from storage order.

Timestamps are integer milliseconds since the Unix epoch.  A certain
timestamp is represented by a degenerate interval (t_min == t_max).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True)
class UncertainEvent:
    """A single recorded event.

    ``activities`` is the set of labels the event may have carried (a
    singleton for a certain label).  ``t_min``/``t_max`` bound the true
    timestamp, in epoch milliseconds.  ``determinate`` is False when the
    event may not have happened at all.
    """

    event_id: str
    activities: frozenset[str]
    t_min: int
    t_max: int
    determinate: bool = True

    def __post_init__(self) -> None:
        # accept any iterable of labels; store a frozenset
        if not isinstance(self.activities, frozenset):
            object.__setattr__(self, "activities", frozenset(self.activities))


@dataclass(frozen=True)
class UncertainTrace:
    """All events recorded for one case.

    Events are kept in the canonical order (t_min, t_max, event_id).
    Storage order carries no meaning: the behavior of the trace is fully
    determined by the events' timestamp intervals.
    """

    case_id: str
    events: tuple[UncertainEvent, ...] = field(default=())

    def __post_init__(self) -> None:
        ordered = tuple(
            sorted(self.events, key=lambda e: (e.t_min, e.t_max, e.event_id))
        )
        object.__setattr__(self, "events", ordered)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[UncertainEvent]:
        return iter(self.events)


@dataclass(frozen=True)
class UncertainLog:
    """A collection of traces, kept sorted by case id."""

    traces: tuple[UncertainTrace, ...] = field(default=())

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.traces, key=lambda t: t.case_id))
        object.__setattr__(self, "traces", ordered)

    def __len__(self) -> int:
        return len(self.traces)

    def __iter__(self) -> Iterator[UncertainTrace]:
        return iter(self.traces)


class InvalidTraceError(ValueError):
    """Raised when an operation receives a trace that fails validation."""

    def __init__(self, case_id: str, violations: list[str]):
        self.case_id = case_id
        self.violations = violations
        detail = "; ".join(violations)
        super().__init__(f"invalid trace {case_id!r}: {detail}")


def validate_trace(trace: UncertainTrace) -> list[str]:
    """Check every model invariant; return a list of violations.

    An empty list means the trace is valid.  Each violation names the
    offending event id and the rule it breaks.  Nothing is raised here
    so that callers can report all problems at once.
    """
    violations: list[str] = []
    seen: set[str] = set()
    for event in trace.events:
        if not event.event_id:
            violations.append("empty event id")
        elif event.event_id in seen:
            violations.append(f"duplicate event id {event.event_id}")
        else:
            seen.add(event.event_id)
        if not event.activities:
            violations.append(f"event {event.event_id} has no activity labels")
        if not isinstance(event.t_min, int) or not isinstance(event.t_max, int):
            violations.append(f"event {event.event_id} has non-integer timestamps")
        elif event.t_min > event.t_max:
            violations.append(
                f"event {event.event_id} has t_min {event.t_min} > t_max {event.t_max}"
            )
    return violations


def ensure_valid(trace: UncertainTrace) -> None:
    """Raise InvalidTraceError if the trace breaks any invariant."""
    violations = validate_trace(trace)
    if violations:
        raise InvalidTraceError(trace.case_id, violations)


def validate_log(log: UncertainLog) -> list[str]:
    """Validate every trace plus the log-level uniqueness invariants."""
    violations: list[str] = []
    seen_cases: set[str] = set()
    seen_events: set[str] = set()
    for trace in log.traces:
        if trace.case_id in seen_cases:
            violations.append(f"duplicate case id {trace.case_id}")
        seen_cases.add(trace.case_id)
        violations.extend(validate_trace(trace))
        for event in trace.events:
            if event.event_id in seen_events:
                violations.append(
                    f"event id {event.event_id} appears in more than one trace"
                )
            seen_events.add(event.event_id)
    return violations


def is_certain(event: UncertainEvent) -> bool:
    """True when the event's timestamp is a single known instant."""
    return event.t_min == event.t_max


def precedes(v: UncertainEvent, w: UncertainEvent) -> bool:
    """True when v is guaranteed to have happened strictly before w.

    This holds exactly when every timestamp v could have had is earlier
    than every timestamp w could have had.  Overlapping intervals (and
    identical certain timestamps) leave the pair unordered.
    """
    return v.t_max < w.t_min


def make_trace(case_id: str, events: Iterable[UncertainEvent]) -> UncertainTrace:
    """Convenience constructor accepting any iterable of events."""
    return UncertainTrace(case_id=case_id, events=tuple(events))
