"""Edge-labeled graphs and constructors for cycles, stars, wheels and complete graphs.

Vertices are numbered from 1. Constructors fix the edge order:

* cycle ``(l_1..l_n)``: edge ``i`` joins ``v_i, v_{i+1}``; edge ``n`` joins ``v_1, v_n``.
* star ``(l_1..l_n)``: leaves ``v_1..v_n``, center ``v_{n+1}``, edge ``i`` joins ``v_i, v_{n+1}``.
* wheel: the rim cycle's ``n`` edges, then spoke ``i`` joining ``v_i`` to the hub ``v_{n+1}``.
* complete: the triangle ``v_1 v_2 v_3`` as a cycle, then for each added star
  ``S_i`` (``i = 3, 4, ...``) the edges ``v_j -- v_{i+1}`` for ``j = 1..i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError

FAMILIES = ("cycle", "star", "wheel", "complete", "general")


class Edge(NamedTuple):
    u: int
    v: int
    label: int


@dataclass(frozen=True)
class EdgeLabeledGraph:
    vertex_count: int
    edges: tuple[Edge, ...]
    family: str = "general"
    # label lists the constructor was called with, e.g. {"rim": (...), "spokes": (...)}
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.vertex_count < 1:
            raise DomainError("a graph needs at least one vertex")
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        for u, v, label in self.edges:
            for w in (u, v):
                if not 1 <= w <= self.vertex_count:
                    raise DomainError(f"vertex {w} outside 1..{self.vertex_count}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            _check_label(label)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(e.label for e in self.edges)

    def degree(self, vertex: int) -> int:
        return sum((e.u == vertex) + (e.v == vertex) for e in self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def _check_label(label) -> None:
    if isinstance(label, bool) or not isinstance(label, int) or label < 1:
        raise DomainError(f"edge labels must be positive integers, got {label!r}")


def _labels(labels: Sequence[int]) -> tuple[int, ...]:
    labels = tuple(labels)
    for label in labels:
        _check_label(label)
    return labels


def cycle_edges(labels: Sequence[int]) -> list[Edge]:
    n = len(labels)
    edges = [Edge(i, i + 1, labels[i - 1]) for i in range(1, n)]
    edges.append(Edge(1, n, labels[n - 1]))
    return edges


def make_cycle(labels: Sequence[int]) -> EdgeLabeledGraph:
    labels = _labels(labels)
    if len(labels) < 3:
        raise DomainError(f"a cycle needs at least 3 edges, got {len(labels)}")
    return EdgeLabeledGraph(len(labels), tuple(cycle_edges(labels)), "cycle", {"labels": labels})


def make_star(labels: Sequence[int]) -> EdgeLabeledGraph:
    labels = _labels(labels)
    n = len(labels)
    if n < 2:
        raise DomainError(f"a star needs at least 2 edges, got {n}")
    edges = tuple(Edge(i, n + 1, labels[i - 1]) for i in range(1, n + 1))
    return EdgeLabeledGraph(n + 1, edges, "star", {"labels": labels})


def make_wheel(rim: Sequence[int], spokes: Sequence[int]) -> EdgeLabeledGraph:
    rim, spokes = _labels(rim), _labels(spokes)
    n = len(rim)
    if n < 3:
        raise DomainError(f"a wheel rim needs at least 3 edges, got {n}")
    if len(spokes) != n:
        raise DomainError(f"{n} rim labels but {len(spokes)} spokes")
    edges = cycle_edges(rim) + [Edge(i, n + 1, spokes[i - 1]) for i in range(1, n + 1)]
    return EdgeLabeledGraph(n + 1, tuple(edges), "wheel", {"rim": rim, "spokes": spokes})


def make_complete(c3: Sequence[int], stars: Sequence[Sequence[int]] = ()) -> EdgeLabeledGraph:
    c3 = _labels(c3)
    if len(c3) != 3:
        raise DomainError(f"the base triangle needs 3 labels, got {len(c3)}")
    stars = tuple(_labels(s) for s in stars)
    edges = cycle_edges(c3)
    for j, star in enumerate(stars):
        size = 3 + j
        if len(star) != size:
            raise DomainError(f"star #{j + 1} must have {size} edges, got {len(star)}")
        edges += [Edge(v, size + 1, star[v - 1]) for v in range(1, size + 1)]
    return EdgeLabeledGraph(3 + len(stars), tuple(edges), "complete", {"c3": c3, "stars": stars})


def make_general(vertex_count: int, edges: Sequence[Sequence[int]]) -> EdgeLabeledGraph:
    return EdgeLabeledGraph(vertex_count, tuple(Edge(*e) for e in edges), "general", {})


def cycle_labels(graph: EdgeLabeledGraph) -> tuple[int, ...]:
    """Labels of a cycle-family graph, in edge order."""
    if graph.family != "cycle":
        raise DomainError(f"expected a cycle, got a {graph.family} graph")
    return graph.labels
