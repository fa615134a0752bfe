"""Brute-force ground truth for desk-scale instances.

Nothing here calls the CRT solver or the basis construction, except
:func:`span_check`, whose whole purpose is to run :func:`decompose` on every
enumerated spline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, ConsistencyError, DomainError
from .graph import EdgeLabeledGraph, _labels, make_cycle
from .spline import Spline, _as_spline

DEFAULT_BUDGET = 10**8


def _lcm(values) -> int:
    return reduce(lambda a, b: a // math.gcd(a, b) * b, values, 1)


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.budget:
            raise BudgetExceeded(f"search exceeded budget of {self.budget} candidates")


@dataclass(frozen=True)
class EnumerationReport:
    bound: int
    splines: tuple[Spline, ...]

    @property
    def count(self) -> int:
        return len(self.splines)


def _back_edges(graph: EdgeLabeledGraph) -> list[list[tuple[int, int]]]:
    """For each vertex (0-based) the (earlier vertex, label) pairs, largest label first."""
    back = [[] for _ in range(graph.vertex_count)]
    for u, v, label in graph.edges:
        lo, hi = sorted((u - 1, v - 1))
        back[hi].append((lo, label))
    for b in back:
        b.sort(key=lambda e: -e[1])
    return back


def iter_splines(
    graph: EdgeLabeledGraph, bound: int, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[int, ...]]:
    """Yield every spline in ``[0, bound)^n`` in lexicographic order.

    Vertices are filled in order; each new entry steps through the residue
    class forced by its largest-label earlier neighbor and is checked
    against the remaining earlier neighbors directly.
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    back = _back_edges(graph)
    n = graph.vertex_count
    counter = _Counter(budget)
    values = [0] * n

    def rec(i: int):
        if i == n:
            yield tuple(values)
            return
        edges = back[i]
        if edges:
            j, step = edges[0]
            start, rest = values[j] % step, edges[1:]
        else:
            start, step, rest = 0, 1, ()
        candidates = range(start, bound, step)
        counter.spend(len(candidates))
        for x in candidates:
            if all((x - values[j]) % label == 0 for j, label in rest):
                values[i] = x
                yield from rec(i + 1)

    yield from rec(0)


def enumerate_splines(
    graph: EdgeLabeledGraph, bound: int, budget: int = DEFAULT_BUDGET
) -> EnumerationReport:
    return EnumerationReport(bound, tuple(Spline(v) for v in iter_splines(graph, bound, budget)))


def naive_splines(graph: EdgeLabeledGraph, bound: int) -> list[tuple[int, ...]]:
    """Filter all of ``[0, bound)^n``; only for tiny instances."""
    from itertools import product

    return [
        g
        for g in product(range(bound), repeat=graph.vertex_count)
        if all((g[u - 1] - g[v - 1]) % label == 0 for u, v, label in graph.edges)
    ]


def scan_crt(residues: Sequence[int], moduli: Sequence[int]) -> Optional[tuple[int, int]]:
    """Least ``x`` in ``[0, lcm)`` meeting every congruence, by linear scan."""
    period = _lcm(moduli)
    step, start = max(zip(moduli, residues))
    for x in range(start % step, period, step):
        if all((x - r) % m == 0 for r, m in zip(residues, moduli)):
            return x, period
    return None


def leading_entry_attainable(labels: Sequence[int], k: int, value: int) -> bool:
    """Does some flow-up class ``G_k`` on the cycle have ``value`` at ``v_{k+1}``?

    Propagates the set of residues each vertex can take modulo its outgoing
    edge label, scanning one ``lcm`` window of consecutive labels per step.
    """
    labels = _labels(labels)
    n = len(labels)
    if not 1 <= k < n:
        raise DomainError(f"k must lie in 1..{n - 1}")
    if value == 0 or value % labels[k - 1]:
        return False
    reach = {value % labels[k]}
    for p in range(k + 1, n):
        into, out = labels[p - 1], labels[p]
        window = into * out // math.gcd(into, out)
        reach = {x % out for x in range(window) if x % into in reach}
    return 0 in reach


@dataclass(frozen=True)
class MinimalityVerdict:
    counterexample: Optional[Spline] = None

    @property
    def minimal(self) -> bool:
        return self.counterexample is None

    def __bool__(self):
        return self.minimal


def minimality_scan(
    labels: Sequence[int],
    k: int,
    candidate,
    bound: int,
    criterion: str = "dominance",
    budget: int = DEFAULT_BUDGET,
) -> MinimalityVerdict:
    """Search flow-up classes ``G_k`` with entries in ``[0, bound)`` that beat ``candidate``.

    ``criterion="dominance"``: a class beats the candidate if it is entry-wise
    ``<=`` and differs somewhere (nonnegative entries allowed).

    ``criterion="universal"``: a class whose non-leading entries are all
    positive beats the candidate if *any* entry is strictly smaller.
    """
    labels = _labels(labels)
    candidate = _as_spline(candidate)
    n = len(labels)
    if len(candidate) != n or not 0 <= k < n:
        raise DomainError("candidate length or k does not match the cycle")
    if k and (any(candidate[:k]) or candidate[k] == 0):
        raise DomainError(f"candidate does not have exactly {k} leading zeros")
    if criterion == "dominance":
        return _dominance_scan(labels, k, candidate, bound, _Counter(budget))
    if criterion == "universal":
        return _universal_scan(labels, k, candidate, bound, _Counter(budget))
    raise DomainError(f"unknown criterion {criterion!r}")


def _dominance_scan(labels, k, candidate, bound, counter) -> MinimalityVerdict:
    n = len(labels)
    if k == 0:
        # G_0 classes are positive multiples of the all-ones spline
        for c in range(1, min(bound, min(candidate) + 1)):
            counter.spend()
            if all(c <= x for x in candidate) and (c,) * n != candidate.values:
                return MinimalityVerdict(Spline([c] * n))
        return MinimalityVerdict()
    values = [0] * n

    def rec(p: int) -> Optional[tuple[int, ...]]:
        if p == n:
            if values[n - 1] % labels[n - 1] == 0 and tuple(values) != candidate.values:
                return tuple(values)
            return None
        step = labels[p - 1]
        start = step if p == k else values[p - 1] % step
        cap = min(bound - 1, candidate[p])
        counter.spend(max(0, (cap - start) // step + 1))
        for x in range(start, cap + 1, step):
            values[p] = x
            found = rec(p + 1)
            if found:
                return found
        return None

    found = rec(k)
    return MinimalityVerdict(Spline(found) if found else None)


def _universal_scan(labels, k, candidate, bound, counter) -> MinimalityVerdict:
    n = len(labels)
    counter.spend(2 * n * bound)
    if k == 0:
        c = 1
        if c < bound and any(c < x for x in candidate):
            return MinimalityVerdict(Spline([c] * n))
        return MinimalityVerdict()
    span = range(1, bound)
    # forward: values v_{p+1} can take given the zero prefix and earlier entries
    fwd = {k: [x for x in span if x % labels[k - 1] == 0]}
    for p in range(k + 1, n):
        m = labels[p - 1]
        res = {y % m for y in fwd[p - 1]}
        fwd[p] = [x for x in span if x % m in res]
    # backward: values from which the chain can still close back to v_1 = 0
    bwd = {n - 1: {x for x in span if x % labels[n - 1] == 0}}
    for p in range(n - 2, k - 1, -1):
        m = labels[p]
        res = {y % m for y in bwd[p + 1]}
        bwd[p] = {x for x in span if x % m in res}
    for p in range(k, n):
        below = [x for x in fwd[p] if x in bwd[p] and x < candidate[p]]
        if below:
            return MinimalityVerdict(_witness(labels, k, p, below[0], fwd, bwd))
    return MinimalityVerdict()


def _witness(labels, k, p, x, fwd, bwd) -> Spline:
    n = len(labels)
    values = [0] * n
    values[p] = x
    for q in range(p - 1, k - 1, -1):
        m = labels[q]
        values[q] = next(y for y in fwd[q] if (y - values[q + 1]) % m == 0)
    for q in range(p + 1, n):
        m = labels[q - 1]
        values[q] = min(y for y in bwd[q] if (y - values[q - 1]) % m == 0)
    return Spline(values)


@dataclass(frozen=True)
class SpanReport:
    bound: int
    count: int
    failure: Optional[Spline] = None
    reason: str = field(default="", compare=False)

    @property
    def spanned(self) -> bool:
        return self.failure is None

    def __bool__(self):
        return self.spanned


def span_check(
    labels: Sequence[int], bound: Optional[int] = None, budget: int = DEFAULT_BUDGET
) -> SpanReport:
    """Decompose every spline in ``[0, bound)^n`` and recombine it.

    ``bound`` defaults to the lcm of the labels.
    """
    from .cycle import _greedy_rows, _peel

    labels = _labels(labels)
    if bound is None:
        bound = _lcm(labels)
    rows = _greedy_rows(labels)
    n = len(labels)
    # enumerate fully first so an over-budget instance fails before any peeling
    splines = list(iter_splines(make_cycle(labels), bound, budget))
    for count, values in enumerate(splines, start=1):
        try:
            coeffs = _peel(rows, values)
            back = tuple(sum(c * row[i] for c, row in zip(coeffs, rows)) for i in range(n))
            if back != values:
                raise ConsistencyError(f"recombination of {coeffs} does not give back {values}")
        except ConsistencyError as exc:
            return SpanReport(bound, count, Spline(values), str(exc))
    return SpanReport(bound, len(splines))
