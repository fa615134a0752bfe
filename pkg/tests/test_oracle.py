import pytest
from hypothesis import given, strategies as st

from gsplines.errors import BudgetExceeded, DomainError
from gsplines.graph import make_cycle, make_general, make_star, make_wheel
from gsplines.oracle import (
    enumerate_splines,
    iter_splines,
    leading_entry_attainable,
    minimality_scan,
    naive_splines,
    span_check,
)
from gsplines.spline import Spline, verify

TRI = make_cycle([2, 3, 5])


def test_enumeration_examples():
    assert enumerate_splines(TRI, 30).count == 900
    for g in (TRI, make_star([3, 4]), make_wheel([2, 3, 5], [1, 2, 3])):
        report = enumerate_splines(g, 1)
        assert report.splines == (Spline.zeros(g.vertex_count),)
    assert enumerate_splines(TRI, 2).splines == (Spline([0, 0, 0]), Spline([1, 1, 1]))


def test_enumeration_sorted_and_valid():
    report = enumerate_splines(make_cycle([5, 2, 4, 8]), 12)
    values = [s.values for s in report.splines]
    assert values == sorted(values)
    assert all(verify(make_cycle([5, 2, 4, 8]), s) for s in report.splines)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_splines(make_cycle([1, 1, 1, 1]), 100, budget=1000)
    with pytest.raises(DomainError):
        enumerate_splines(TRI, 0)


@st.composite
def small_graph(draw):
    n = draw(st.integers(1, 4))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = [(u, v, draw(st.integers(1, 9))) for u, v in chosen]
    return make_general(n, edges)


@given(small_graph(), st.integers(1, 12))
def test_pruned_equals_naive(graph, bound):
    assert list(iter_splines(graph, bound)) == naive_splines(graph, bound)


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.integers(1, 10))
def test_enumeration_closed_under_addition(labels, bound):
    found = {s.values for s in enumerate_splines(make_cycle(labels), bound).splines}
    for a in found:
        for b in found:
            c = tuple(x + y for x, y in zip(a, b))
            if max(c) < bound:
                assert c in found


def test_minimality_examples():
    assert minimality_scan((2, 3, 5), 1, (0, 2, 5), 30)
    assert minimality_scan((2, 3, 5), 2, (0, 0, 15), 30)
    verdict = minimality_scan((2, 3, 5), 1, (0, 4, 10), 30)
    assert verdict.counterexample == Spline([0, 2, 5])
    assert minimality_scan((2, 3, 5), 0, (1, 1, 1), 30)
    assert minimality_scan((2, 3, 5), 0, (2, 2, 2), 30).counterexample == Spline([1, 1, 1])


def test_minimality_universal_criterion():
    assert minimality_scan((2, 3, 5), 1, (0, 2, 5), 30, criterion="universal")
    # (0, 2, 2) has a smaller last entry than (0, 1, 4) but a larger leading entry
    verdict = minimality_scan((1, 3, 2), 1, (0, 1, 4), 6, criterion="universal")
    assert verdict.counterexample == Spline([0, 2, 2])
    assert verify(make_cycle([1, 3, 2]), verdict.counterexample)


def test_minimality_rejects_bad_candidate():
    with pytest.raises(DomainError):
        minimality_scan((2, 3, 5), 2, (0, 2, 5), 30)
    with pytest.raises(DomainError):
        minimality_scan((2, 3, 5), 1, (0, 2, 5), 30, criterion="pareto")


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.data())
def test_universal_scan_matches_brute_force(labels, data):
    n = len(labels)
    k = data.draw(st.integers(1, n - 1))
    bound = data.draw(st.integers(2, 14))
    candidate = [0] * k + data.draw(st.lists(st.integers(1, 15), min_size=n - k, max_size=n - k))
    positive = [
        s for s in naive_splines(make_cycle(labels), bound)
        if not any(s[:k]) and all(x > 0 for x in s[k:])
    ]
    beaten = any(any(s[i] < candidate[i] for i in range(n)) for s in positive)
    verdict = minimality_scan(labels, k, candidate, bound, criterion="universal")
    assert verdict.minimal == (not beaten)
    if not verdict.minimal:
        assert verdict.counterexample.values in positive


@given(st.lists(st.integers(1, 6), min_size=3, max_size=4), st.data())
def test_dominance_scan_matches_brute_force(labels, data):
    n = len(labels)
    k = data.draw(st.integers(1, n - 1))
    bound = data.draw(st.integers(2, 14))
    candidate = tuple([0] * k + data.draw(st.lists(st.integers(1, 15), min_size=n - k, max_size=n - k)))
    classes = [s for s in naive_splines(make_cycle(labels), bound) if not any(s[:k]) and s[k]]
    beaten = any(s != candidate and all(a <= b for a, b in zip(s, candidate)) for s in classes)
    assert minimality_scan(labels, k, candidate, bound).minimal == (not beaten)


def test_leading_entry_attainable():
    assert leading_entry_attainable((2, 3, 5), 1, 2)
    assert not leading_entry_attainable((2, 3, 5), 1, 4 - 1)
    assert leading_entry_attainable((5, 4, 6), 2, 12)
    assert not any(leading_entry_attainable((5, 4, 6), 2, v) for v in range(1, 12))
    assert [v for v in range(1, 41) if leading_entry_attainable((5, 2, 4, 8), 1, v)] == [10, 20, 30, 40]


@pytest.mark.parametrize("labels, bound, count", [((2, 3, 5), 30, 900), ((1, 1, 1), 3, 27), ((5, 2, 4, 8), 40, None)])
def test_span_examples(labels, bound, count):
    report = span_check(labels, bound)
    assert report.spanned, report.reason
    if count is not None:
        assert report.count == count


def test_span_default_bound():
    assert span_check((2, 3, 5)).bound == 30


def test_span_reports_failure(monkeypatch):
    from gsplines import cycle

    monkeypatch.setattr(cycle, "_greedy_rows", lambda labels: ((1, 1, 1), (0, 4, 10), (0, 0, 15)))
    report = span_check((2, 3, 5), 30)
    assert not report.spanned
    assert report.failure is not None and "multiple" in report.reason
