from __future__ import annotations

import pytest

from conftest import FIVE_EVENT_EDGES, SIX_EVENT_EDGES

from ubgraph import (
    UncertainEvent,
    UncertainTrace,
    covering_relation,
    enumerate_realizations,
    linear_extensions,
    possible_immediate_successor,
    udfg_bounds_log,
    udfg_bounds_trace,
)
from ubgraph.oracle import SizeLimitError


def _event(event_id, t_min, t_max, labels=("a",), determinate=True):
    return UncertainEvent(event_id, frozenset(labels), t_min, t_max, determinate)


def test_covering_golden(five_event_trace, six_event_trace):
    assert covering_relation(five_event_trace) == FIVE_EVENT_EDGES
    assert covering_relation(six_event_trace) == SIX_EVENT_EDGES


def test_covering_empty_and_single():
    assert covering_relation(UncertainTrace("c")) == frozenset()
    assert covering_relation(UncertainTrace("c", (_event("e1", 0, 0),))) == frozenset()


def test_extensions_of_five_event_fixture(five_event_trace):
    # worked out by hand: e1 first, e5 last, e3 floats around e2 < e4
    assert linear_extensions(five_event_trace) == {
        ("e1", "e2", "e3", "e4", "e5"),
        ("e1", "e2", "e4", "e3", "e5"),
        ("e1", "e3", "e2", "e4", "e5"),
    }


def test_extensions_of_antichain():
    trace = UncertainTrace("c", tuple(_event(f"e{i}", 0, 9) for i in range(3)))
    assert len(linear_extensions(trace)) == 6


def test_extensions_of_chain():
    trace = UncertainTrace("c", tuple(_event(f"e{i}", i * 10, i * 10) for i in range(5)))
    assert linear_extensions(trace) == {("e0", "e1", "e2", "e3", "e4")}


def test_extensions_size_guard():
    trace = UncertainTrace("c", tuple(_event(f"e{i}", 0, 9) for i in range(11)))
    with pytest.raises(SizeLimitError, match="limited to 10"):
        linear_extensions(trace)


def test_realizations_of_certain_event():
    trace = UncertainTrace("c", (_event("e1", 0, 0),))
    assert enumerate_realizations(trace) == {(("e1", "a"),)}


def test_realizations_of_two_label_event():
    trace = UncertainTrace("c", (_event("e1", 0, 0, labels=("a", "b")),))
    assert enumerate_realizations(trace) == {(("e1", "a"),), (("e1", "b"),)}


def test_realizations_of_indeterminate_event():
    trace = UncertainTrace("c", (_event("e1", 0, 0, determinate=False),))
    assert enumerate_realizations(trace) == {(), (("e1", "a"),)}


def test_realization_count_of_five_event_fixture(five_event_trace):
    # 3 orders x 4 labelings, with and without the indeterminate e5
    realizations = enumerate_realizations(five_event_trace)
    assert len(realizations) == 24
    with_e5 = {r for r in realizations if any(i == "e5" for i, _ in r)}
    assert len(with_e5) == 12
    for realization in with_e5:
        assert [i for i, _ in realization][0] == "e1"
        assert [i for i, _ in realization][-1] == "e5"


def test_realizations_size_guard():
    trace = UncertainTrace("c", tuple(_event(f"e{i}", 0, 9) for i in range(9)))
    with pytest.raises(SizeLimitError, match="limited to 8"):
        enumerate_realizations(trace)


def test_realizations_budget_guard():
    # 8 mutually overlapping events -> 8! orders alone busts the budget
    trace = UncertainTrace(
        "c", tuple(_event(f"e{i}", 0, 9, labels=("a", "b")) for i in range(8))
    )
    with pytest.raises(SizeLimitError, match="realizations"):
        enumerate_realizations(trace)


def test_possible_immediate_successor(six_event_trace):
    assert possible_immediate_successor(six_event_trace, "e1", "e2")
    assert not possible_immediate_successor(six_event_trace, "e1", "e6")
    with pytest.raises(ValueError, match="unknown event id"):
        possible_immediate_successor(six_event_trace, "e1", "nope")


def test_immediate_successor_without_precedence():
    # overlap lets either event come first even though neither precedes
    trace = UncertainTrace("c", (_event("A", 0, 10), _event("B", 2, 3)))
    assert possible_immediate_successor(trace, "B", "A")
    assert possible_immediate_successor(trace, "A", "B")


def test_udfg_five_event_fixture(five_event_trace):
    bounds = udfg_bounds_trace(five_event_trace)
    assert bounds, "expected at least one reported pair"
    assert all(value == (0, 1) for value in bounds.values())


def test_udfg_certain_pair():
    trace = UncertainTrace("c", (_event("e1", 0, 0, labels=("a",)), _event("e2", 9, 9, labels=("b",))))
    assert udfg_bounds_trace(trace) == {("a", "b"): (1, 1)}


def test_udfg_single_event_empty():
    assert udfg_bounds_trace(UncertainTrace("c", (_event("e1", 0, 0),))) == {}


def test_udfg_log_sums_per_trace_bounds():
    t1 = UncertainTrace("c1", (_event("x1", 0, 0, ("a",)), _event("x2", 9, 9, ("b",))))
    t2 = UncertainTrace("c2", (_event("y1", 0, 0, ("a",)), _event("y2", 9, 9, ("b",))))
    assert udfg_bounds_log([t1, t2]) == {("a", "b"): (2, 2)}


def test_udfg_log_empty():
    assert udfg_bounds_log([]) == {}
