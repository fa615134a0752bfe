"""Integer number theory primitives and the general Chinese Remainder Theorem.

Moduli need not be coprime: a system ``x = r_i (mod m_i)`` is solvable iff
``r_i = r_j (mod gcd(m_i, m_j))`` for every pair, and the solution is then
unique modulo ``lcm(m_1, ..., m_k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class Congruence:
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")

    def holds(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class CrtSolution:
    """Least nonnegative solution ``value`` and the period ``modulus``."""

    value: int
    modulus: int

    def __iter__(self):
        yield self.value
        yield self.modulus


def _positive(values: Sequence[int], what: str) -> list[int]:
    values = list(values)
    if not values:
        raise DomainError(f"{what} of an empty list")
    for v in values:
        if v < 1:
            raise DomainError(f"{what} expects positive integers, got {v}")
    return values


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, _positive(values, "gcd"))


def _lcm2(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def lcm_all(values: Iterable[int]) -> int:
    return reduce(_lcm2, _positive(values, "lcm"))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``, ``g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def crt_pair(a: Congruence, b: Congruence) -> Optional[CrtSolution]:
    """Combine two congruences; ``None`` when they are incompatible."""
    g, p, _ = xgcd(a.modulus, b.modulus)
    diff = b.residue - a.residue
    if diff % g:
        return None
    # a.residue + a.modulus * t hits b's class when t = (diff/g) * p mod (b.modulus/g)
    step = b.modulus // g
    t = (diff // g) * p % step
    modulus = a.modulus * step
    return CrtSolution((a.residue + a.modulus * t) % modulus, modulus)


def crt_system(congruences: Iterable[Congruence]) -> Optional[CrtSolution]:
    """Fold :func:`crt_pair` over a nonempty system."""
    congruences = list(congruences)
    if not congruences:
        raise DomainError("crt_system needs at least one congruence")
    first = congruences[0]
    acc = CrtSolution(first.residue % first.modulus, first.modulus)
    for c in congruences[1:]:
        acc = crt_pair(Congruence(acc.value, acc.modulus), c)
        if acc is None:
            return None
    return acc


def solve(residues: Sequence[int], moduli: Sequence[int]) -> Optional[CrtSolution]:
    """Convenience wrapper taking parallel residue and modulus lists."""
    if len(residues) != len(moduli):
        raise DomainError("residues and moduli differ in length")
    return crt_system(Congruence(r, m) for r, m in zip(residues, moduli))
