"""Splines on stars, wheels and complete graphs, built from cycles and stars.

A star's center can be labeled iff the leaf/label congruences form a solvable
CRT system, i.e. ``leaf_i = leaf_j (mod gcd(l_i, l_j))`` for all pairs. A
single gcd over all spoke labels is not enough: labels ``(2, 3, 4)`` have
gcd 1 but leaves ``(0, 0, 1)`` admit no center.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .arith import Congruence, CrtSolution, crt_system
from .errors import DomainError
from .graph import EdgeLabeledGraph, _labels, make_complete, make_cycle
from .spline import Spline, Verdict, Violation, _as_spline, verify

CenterSolution = CrtSolution


def star_center(labels: Sequence[int], leaves: Sequence[int]) -> Optional[CenterSolution]:
    """Least nonnegative center label for the given leaves, or ``None``."""
    labels = _labels(labels)
    if len(labels) < 2:
        raise DomainError(f"a star needs at least 2 edges, got {len(labels)}")
    if len(leaves) != len(labels):
        raise DomainError(f"{len(labels)} edge labels but {len(leaves)} leaves")
    return crt_system(Congruence(int(g), m) for g, m in zip(leaves, labels))


def _require(graph: EdgeLabeledGraph, family: str):
    if graph.family != family:
        raise DomainError(f"expected a {family} graph, got {graph.family}")


def wheel_verify(graph: EdgeLabeledGraph, s) -> Verdict:
    """Check the rim as a cycle, then each spoke against the hub."""
    _require(graph, "wheel")
    s = _as_spline(s)
    rim, spokes = graph.params["rim"], graph.params["spokes"]
    n = len(rim)
    if len(s) != n + 1:
        raise DomainError(f"a wheel on {n + 1} vertices needs {n + 1} entries, got {len(s)}")
    verdict = verify(make_cycle(rim), s.values[:n])
    if not verdict:
        return verdict
    hub = s[n]
    for i, label in enumerate(spokes, start=1):
        if (hub - s[i - 1]) % label:
            return Verdict(Violation(n + i, i, n + 1, label))
    return Verdict()


def wheel_extend(rim: Sequence[int], spokes: Sequence[int], rim_spline) -> Optional[CenterSolution]:
    """Hub residue class making ``rim_spline`` plus hub a spline on the wheel."""
    rim, spokes = _labels(rim), _labels(spokes)
    rim_spline = _as_spline(rim_spline)
    if len(spokes) != len(rim):
        raise DomainError(f"{len(rim)} rim labels but {len(spokes)} spokes")
    verdict = verify(make_cycle(rim), rim_spline)
    if not verdict:
        raise DomainError(f"rim labeling is not a spline on the rim: {verdict.violation}")
    return star_center(spokes, rim_spline.values)


def complete_verify(graph: EdgeLabeledGraph, s) -> Verdict:
    """Check the base triangle, then each added star's new vertex against its leaves."""
    _require(graph, "complete")
    s = _as_spline(s)
    if len(s) != graph.vertex_count:
        raise DomainError(f"expected {graph.vertex_count} entries, got {len(s)}")
    verdict = verify(make_cycle(graph.params["c3"]), s.values[:3])
    if not verdict:
        return verdict
    edge = 3
    for star in graph.params["stars"]:
        center = len(star) + 1
        for j, label in enumerate(star, start=1):
            edge += 1
            if (s[center - 1] - s[j - 1]) % label:
                return Verdict(Violation(edge, j, center, label))
    return Verdict()


def complete_extend(
    graph: EdgeLabeledGraph, s, new_star_labels: Sequence[int]
) -> Optional[tuple[EdgeLabeledGraph, Spline]]:
    """Grow ``K_n`` to ``K_{n+1}`` by one star, labeling the new vertex minimally."""
    _require(graph, "complete")
    s = _as_spline(s)
    new_star_labels = _labels(new_star_labels)
    n = graph.vertex_count
    if len(new_star_labels) != n:
        raise DomainError(f"K_{n} needs a star with {n} edges, got {len(new_star_labels)}")
    verdict = verify(graph, s)
    if not verdict:
        raise DomainError(f"not a spline on the complete graph: {verdict.violation}")
    center = star_center(new_star_labels, s.values)
    if center is None:
        return None
    bigger = make_complete(graph.params["c3"], graph.params["stars"] + (new_star_labels,))
    return bigger, Spline(s.values + (center.value,))
