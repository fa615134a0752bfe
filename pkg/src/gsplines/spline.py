"""Splines as vertex labelings, edge-congruence checking and the Z-module operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import DomainError
from .graph import EdgeLabeledGraph


@dataclass(frozen=True)
class Spline:
    """Vertex labels ``(g_1, ..., g_n)``; ``values[i - 1]`` sits on vertex ``v_i``."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        object.__setattr__(self, "values", tuple(int(v) for v in values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __add__(self, other: "Spline") -> "Spline":
        return add(self, other)

    def __sub__(self, other: "Spline") -> "Spline":
        return add(self, scale(-1, other))

    def __rmul__(self, c: int) -> "Spline":
        return scale(c, self)

    def __neg__(self) -> "Spline":
        return scale(-1, self)

    def __repr__(self):
        return f"Spline{self.values}"

    @classmethod
    def zeros(cls, n: int) -> "Spline":
        return cls([0] * n)

    @classmethod
    def ones(cls, n: int) -> "Spline":
        return cls([1] * n)


class Violation(NamedTuple):
    edge: int  # 1-based position in the graph's edge list
    u: int
    v: int
    label: int


@dataclass(frozen=True)
class Verdict:
    violation: Optional[Violation] = None

    @property
    def valid(self) -> bool:
        return self.violation is None

    def __bool__(self):
        return self.valid


VALID = Verdict()


def _as_spline(s) -> Spline:
    return s if isinstance(s, Spline) else Spline(s)


def verify(graph: EdgeLabeledGraph, s) -> Verdict:
    """Check every edge congruence; report the first failing edge in edge order."""
    s = _as_spline(s)
    if len(s) != graph.vertex_count:
        raise DomainError(f"spline has {len(s)} entries, graph has {graph.vertex_count} vertices")
    for index, (u, v, label) in enumerate(graph.edges, start=1):
        if (s[u - 1] - s[v - 1]) % label:
            return Verdict(Violation(index, u, v, label))
    return VALID


def is_spline(graph: EdgeLabeledGraph, s) -> bool:
    return verify(graph, s).valid


def add(a, b) -> Spline:
    a, b = _as_spline(a), _as_spline(b)
    if len(a) != len(b):
        raise DomainError(f"cannot add splines of lengths {len(a)} and {len(b)}")
    return Spline(x + y for x, y in zip(a, b))


def scale(c: int, s) -> Spline:
    return Spline(c * x for x in _as_spline(s))


def combine(coefficients: Iterable[int], splines: Iterable) -> Spline:
    """Integer linear combination ``sum(c_k * s_k)``."""
    coefficients, splines = list(coefficients), [_as_spline(s) for s in splines]
    if len(coefficients) != len(splines) or not splines:
        raise DomainError("need one coefficient per spline and at least one spline")
    total = [0] * len(splines[0])
    for c, s in zip(coefficients, splines):
        if len(s) != len(total):
            raise DomainError("splines of unequal length")
        for i, x in enumerate(s):
            total[i] += c * x
    return Spline(total)
