"""Flow-up classes and the flow-up basis of the spline module on an edge-labeled n-cycle.

A flow-up class ``G_k`` has exactly ``k`` leading zeros. Writing
``D_i = gcd(l_i, ..., l_n)``, any flow-up class satisfies ``g_i = 0 (mod D_i)``
for ``i > k``; conversely a partial labeling ``(0, ..., 0, g_{k+1}, ..., g_i)``
that meets its edge conditions and this congruence always completes to a
spline. That makes the greedy, vertex-by-vertex least nonnegative choice
dead-end free, and the leading entry it picks is
``lcm(l_k, D_{k+1})``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arith import Congruence, crt_pair, lcm_all
from .errors import ConsistencyError, DomainError
from .graph import _labels, make_cycle
from .spline import Spline, _as_spline, combine, verify


@dataclass(frozen=True)
class FlowUpClass:
    k: int
    spline: Spline

    @property
    def leading_entry(self) -> int:
        return self.spline[self.k]


@dataclass(frozen=True)
class FlowUpBasis:
    labels: tuple[int, ...]
    classes: tuple[FlowUpClass, ...]

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, k) -> FlowUpClass:
        return self.classes[k]

    def __iter__(self):
        return iter(self.classes)

    @property
    def rows(self) -> list[list[int]]:
        return [list(c.spline) for c in self.classes]


@dataclass(frozen=True)
class DecompositionResult:
    coefficients: tuple[int, ...]


def _cycle(labels: Sequence[int]) -> tuple[int, ...]:
    labels = _labels(labels)
    if len(labels) < 3:
        raise DomainError(f"a cycle needs at least 3 edges, got {len(labels)}")
    return labels


def suffix_gcds(labels: Sequence[int]) -> list[int]:
    """``out[i - 1] = gcd(l_i, ..., l_n)`` for ``i = 1..n``."""
    out = list(labels)
    for i in range(len(out) - 2, -1, -1):
        out[i] = math.gcd(out[i], out[i + 1])
    return out


def smallest_leading_entry(labels: Sequence[int], k: int) -> int:
    """Least positive value at ``v_{k+1}`` of a flow-up class ``G_k``, ``1 <= k < n``."""
    labels = _cycle(labels)
    n = len(labels)
    if not 1 <= k <= n - 1:
        raise DomainError(f"k must lie in 1..{n - 1}, got {k}")
    return lcm_all([labels[k - 1], suffix_gcds(labels)[k]])


@lru_cache(maxsize=1024)
def _greedy_rows(labels: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(labels)
    tail = suffix_gcds(labels)
    rows = [(1,) * n]
    for k in range(1, n):
        g = [0] * n
        g[k] = smallest_leading_entry(labels, k)
        for i in range(k + 1, n):
            # vertex v_{i+1}: follow edge l_i from v_i, stay completable mod D_{i+1}
            sol = crt_pair(Congruence(g[i - 1], labels[i - 1]), Congruence(0, tail[i]))
            if sol is None:
                raise ConsistencyError(f"greedy step failed at vertex {i + 1} for {labels}, k={k}")
            g[i] = sol.value
        rows.append(tuple(g))
    return tuple(rows)


def smallest_flowup(labels: Sequence[int], k: int) -> FlowUpClass:
    labels = _cycle(labels)
    if not 0 <= k <= len(labels) - 1:
        raise DomainError(f"k must lie in 0..{len(labels) - 1}, got {k}")
    return FlowUpClass(k, Spline(_greedy_rows(labels)[k]))


def flowup_basis(labels: Sequence[int]) -> FlowUpBasis:
    labels = _cycle(labels)
    rows = _greedy_rows(labels)
    return FlowUpBasis(labels, tuple(FlowUpClass(k, Spline(r)) for k, r in enumerate(rows)))


def decompose(labels: Sequence[int], y) -> DecompositionResult:
    """Coefficients of ``y`` in the flow-up basis, by peeling one vertex at a time.

    Raises DomainError if ``y`` is not a spline on the cycle.
    """
    labels, y = _cycle(labels), _as_spline(y)
    verdict = verify(make_cycle(labels), y)
    if not verdict:
        raise DomainError(f"not a spline on the cycle: {verdict.violation}")
    return DecompositionResult(_peel(_greedy_rows(labels), y.values))


def _peel(rows, values) -> tuple[int, ...]:
    residual = list(values)
    n = len(residual)
    coeffs = []
    for k, row in enumerate(rows):
        c, rem = divmod(residual[k], row[k])
        if rem:
            raise ConsistencyError(
                f"entry {residual[k]} at v_{k + 1} is not a multiple of leading entry {row[k]}"
            )
        coeffs.append(c)
        if c:
            for i in range(k, n):
                residual[i] -= c * row[i]
    if any(residual):
        raise ConsistencyError(f"nonzero residual {residual} after peeling")
    return tuple(coeffs)


def recombine(labels: Sequence[int], coeffs: Sequence[int]) -> Spline:
    labels = _cycle(labels)
    if len(coeffs) != len(labels):
        raise DomainError(f"need {len(labels)} coefficients, got {len(coeffs)}")
    return combine(coeffs, _greedy_rows(labels))


def contract_first_edge(labels: Sequence[int], s) -> tuple[tuple[int, ...], Spline]:
    """Drop the edge ``l_1`` between two zero-labeled vertices ``v_1, v_2``."""
    labels, s = _cycle(labels), _as_spline(s)
    if len(labels) < 4:
        raise DomainError("contracting a triangle edge leaves a 2-vertex multigraph")
    if not verify(make_cycle(labels), s):
        raise DomainError("not a spline on the cycle")
    if s[0] or s[1]:
        raise DomainError(f"first two entries must be zero, got {s[0]}, {s[1]}")
    return labels[1:], Spline((0,) + s.values[2:])


def add_leading_zero(labels: Sequence[int], s, new_label: int) -> tuple[tuple[int, ...], Spline]:
    """Insert a zero-labeled vertex before ``v_1`` joined by a new first edge ``new_label``."""
    labels, s = _cycle(labels), _as_spline(s)
    (new_label,) = _labels([new_label])
    if not verify(make_cycle(labels), s):
        raise DomainError("not a spline on the cycle")
    if s[0]:
        raise DomainError(f"first entry must be zero, got {s[0]}")
    return (new_label,) + labels, Spline((0,) + s.values)


def is_flowup(labels: Sequence[int], s, k: int) -> bool:
    """True iff ``s`` is a spline with exactly ``k`` leading zeros (any multiple of ones for k=0)."""
    s = _as_spline(s)
    if not verify(make_cycle(labels), s):
        return False
    if k == 0:
        return len(set(s)) == 1
    return not any(s[:k]) and s[k] != 0
