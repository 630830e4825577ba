from __future__ import annotations

import pytest

from ubgraph import (
    GenerationSpec,
    build_baseline,
    covering_relation,
    generate_certain_log,
    inject_activity_uncertainty,
    inject_indeterminacy,
    inject_time_uncertainty,
    is_certain,
    validate_log,
)


def _spec(**overrides):
    base = dict(n_traces=4, trace_length=10, seed=11)
    base.update(overrides)
    return GenerationSpec(**base)


def test_certain_log_shape():
    log = generate_certain_log(_spec())
    assert len(log) == 4
    assert validate_log(log) == []
    for trace in log.traces:
        assert len(trace) == 10
        times = [e.t_min for e in trace.events]
        assert times == [(k + 1) * 1000 for k in range(10)]
        assert all(is_certain(e) and e.determinate for e in trace.events)
        assert all(len(e.activities) == 1 for e in trace.events)


def test_certain_log_graphs_are_chains():
    log = generate_certain_log(_spec(trace_length=6))
    for trace in log.traces:
        assert len(build_baseline(trace).edges) == 5


def test_generation_is_deterministic():
    assert generate_certain_log(_spec()) == generate_certain_log(_spec())
    other = generate_certain_log(_spec(seed=12))
    assert other != generate_certain_log(_spec())


def test_spec_validation():
    with pytest.raises(ValueError, match="n_traces"):
        GenerationSpec(n_traces=0, trace_length=5)
    with pytest.raises(ValueError, match="trace_length"):
        GenerationSpec(n_traces=1, trace_length=0)
    with pytest.raises(ValueError, match="seed"):
        GenerationSpec(n_traces=1, trace_length=1, seed=-1)


def test_time_injection_share_is_exact():
    log = generate_certain_log(_spec(n_traces=6, trace_length=10))
    for p, expected in [(0.0, 0), (0.25, 2), (0.5, 5), (0.7, 7), (1.0, 10)]:
        injected = inject_time_uncertainty(log, p, seed=3)
        for trace in injected.traces:
            widened = [e for e in trace.events if not is_certain(e)]
            assert len(widened) == expected


def test_time_injection_interval_shape():
    log = generate_certain_log(GenerationSpec(n_traces=1, trace_length=2, seed=0))
    injected = inject_time_uncertainty(log, 1.0, seed=0)
    intervals = sorted((e.t_min, e.t_max) for e in injected.traces[0].events)
    assert intervals == [(-500, 2500), (500, 3500)]
    # widened neighbors overlap, so the pair is unordered
    assert covering_relation(injected.traces[0]) == frozenset()


def test_time_injection_preserves_other_attributes():
    log = generate_certain_log(_spec())
    injected = inject_time_uncertainty(log, 1.0, seed=5)
    for before, after in zip(log.traces, injected.traces):
        for e_before, e_after in zip(before.events, after.events):
            assert e_before.event_id == e_after.event_id
            assert e_before.activities == e_after.activities
            assert e_after.determinate


def test_time_injection_rejects_bad_probability():
    log = generate_certain_log(_spec())
    with pytest.raises(ValueError, match="outside"):
        inject_time_uncertainty(log, 1.5, seed=0)


def test_activity_injection_adds_fresh_labels():
    log = generate_certain_log(_spec())
    injected = inject_activity_uncertainty(log, 1.0, seed=9, extra_labels=1)
    for trace in injected.traces:
        assert all(len(e.activities) == 2 for e in trace.events)
    # topology unchanged: only labels moved
    for before, after in zip(log.traces, injected.traces):
        assert build_baseline(before).edges == build_baseline(after).edges


def test_indeterminacy_injection_counts():
    log = generate_certain_log(_spec(trace_length=8))
    injected = inject_indeterminacy(log, 0.5, seed=2)
    for trace in injected.traces:
        assert sum(1 for e in trace.events if not e.determinate) == 4


def test_injections_are_deterministic():
    log = generate_certain_log(_spec())
    once = inject_time_uncertainty(log, 0.4, seed=7)
    again = inject_time_uncertainty(log, 0.4, seed=7)
    assert once == again
    assert inject_time_uncertainty(log, 0.4, seed=8) != once
