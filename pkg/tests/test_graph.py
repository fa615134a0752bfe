import itertools

import pytest
from hypothesis import given, strategies as st

from gsplines.errors import DomainError
from gsplines.graph import Edge, EdgeLabeledGraph, make_complete, make_cycle, make_general, make_star, make_wheel

labels = st.integers(1, 50)


def test_triangle_numbering():
    g = make_cycle([2, 3, 5])
    assert g.family == "cycle" and g.vertex_count == 3
    assert g.edges == (Edge(1, 2, 2), Edge(2, 3, 3), Edge(1, 3, 5))


def test_square_numbering():
    g = make_cycle([5, 2, 4, 8])
    assert g.edges == (Edge(1, 2, 5), Edge(2, 3, 2), Edge(3, 4, 4), Edge(1, 4, 8))


@pytest.mark.parametrize("bad", [[2, 3], [1, 0, 2], [1, -1, 2], [1, 2.5, 3], [True, 1, 1]])
def test_cycle_rejects(bad):
    with pytest.raises(DomainError):
        make_cycle(bad)


def test_unit_labels_allowed():
    assert make_cycle([1, 1, 1]).labels == (1, 1, 1)


def test_star():
    g = make_star([3, 7, 5, 6])
    assert g.vertex_count == 5
    assert g.edges == tuple(Edge(i, 5, l) for i, l in zip(range(1, 5), [3, 7, 5, 6]))
    assert make_star([2, 2]).edges == (Edge(1, 3, 2), Edge(2, 3, 2))
    with pytest.raises(DomainError):
        make_star([1])


def test_wheel():
    g = make_wheel([2, 3, 5], [2, 1, 5])
    assert g.vertex_count == 4 and len(g.edges) == 6
    assert g.edges[3:] == (Edge(1, 4, 2), Edge(2, 4, 1), Edge(3, 4, 5))
    with pytest.raises(DomainError):
        make_wheel([2, 3], [2, 3])
    with pytest.raises(DomainError):
        make_wheel([2, 3, 5], [2, 3])


def test_complete():
    g = make_complete([2, 3, 5], [[2, 1, 5]])
    assert g.vertex_count == 4 and len(g.edges) == 6
    assert g.edges[3:] == (Edge(1, 4, 2), Edge(2, 4, 1), Edge(3, 4, 5))
    k3 = make_complete([1, 1, 1])
    assert k3.vertex_count == 3 and k3.edges == make_cycle([1, 1, 1]).edges
    with pytest.raises(DomainError):
        make_complete([2, 3, 5], [[2, 1]])
    with pytest.raises(DomainError):
        make_complete([2, 3])


def test_general_validation():
    g = make_general(3, [[1, 2, 4], [2, 3, 6]])
    assert g.family == "general"
    with pytest.raises(DomainError):
        make_general(2, [[1, 1, 3]])
    with pytest.raises(DomainError):
        make_general(2, [[1, 3, 3]])
    with pytest.raises(DomainError):
        EdgeLabeledGraph(2, ((1, 2, 3),), family="tree")


@given(st.integers(3, 9).flatmap(lambda n: st.lists(labels, min_size=n, max_size=n)), st.data())
def test_complete_graph_structure(c3_and_more, data):
    n = data.draw(st.integers(3, 8))
    stars = [data.draw(st.lists(labels, min_size=i, max_size=i)) for i in range(3, n)]
    g = make_complete(c3_and_more[:3], stars)
    assert g.vertex_count == n
    assert len(g.edges) == n * (n - 1) // 2
    pairs = {frozenset((e.u, e.v)) for e in g.edges}
    assert pairs == {frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)}


@given(st.integers(3, 10).flatmap(lambda n: st.tuples(
    st.lists(labels, min_size=n, max_size=n), st.lists(labels, min_size=n, max_size=n))))
def test_wheel_degrees(rim_spokes):
    rim, spokes = rim_spokes
    n = len(rim)
    g = make_wheel(rim, spokes)
    assert all(g.degree(v) == 3 for v in range(1, n + 1))
    assert g.degree(n + 1) == n


@given(st.lists(labels, min_size=3, max_size=10))
def test_constructors_deterministic(ls):
    assert make_cycle(ls) == make_cycle(list(ls))
    assert make_cycle(ls).edges == make_cycle(tuple(ls)).edges
