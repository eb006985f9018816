"""Ternary sums ``x(a1x+a2)/2 + y(b1y+b2)/2 + z(c1z+c2)/2`` and their value sets.

A sum is encoded as a :class:`TernaryTuple` ``(a1, a2, b1, b2, c1, c2)``.
Each component ``(a, b)`` is the theta factor ``f(q^((a+b)/2), q^((a-b)/2))``,
so the representation counts R(n) are the coefficients of a product of three
theta series.  Every universality verdict here is a bounded statement: it
covers ``0..N`` and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from .qseries import Series, product
from .theta import component_to_factor, theta_series

Component = tuple[int, int]


def _check_component(a: int, b: int) -> None:
    if a <= 0:
        raise ValueError(f"leading coefficient {a} must be positive")
    if (a - b) % 2:
        raise ValueError(f"component ({a}, {b}): a - b must be even")


@dataclass(frozen=True)
class TernaryTuple:
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int

    def __post_init__(self):
        for a, b in self.components:
            _check_component(a, b)

    @classmethod
    def of(cls, *values: int) -> "TernaryTuple":
        if len(values) == 1:
            values = tuple(values[0])
        if len(values) != 6:
            raise ValueError(f"a tuple needs six integers, got {len(values)}")
        return cls(*(int(v) for v in values))

    @classmethod
    def from_components(cls, comps: Sequence[Component]) -> "TernaryTuple":
        if len(comps) != 3:
            raise ValueError("a ternary tuple has exactly three components")
        return cls(*(v for c in comps for v in c))

    @property
    def components(self) -> tuple[Component, Component, Component]:
        return (self.a1, self.a2), (self.b1, self.b2), (self.c1, self.c2)

    def canonical(self) -> "TernaryTuple":
        """Nonnegative linear terms, components sorted in decreasing order."""
        comps = sorted(((a, abs(b)) for a, b in self.components), reverse=True)
        return TernaryTuple.from_components(comps)

    def value(self, x: int, y: int, z: int) -> int:
        return sum(component_value(a, b, v) for (a, b), v in zip(self.components, (x, y, z)))

    def astuple(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    def __iter__(self):
        return iter(self.astuple())

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.astuple()) + ")"


def component_value(a1: int, a2: int, x: int) -> int:
    """``x(a1 x + a2)/2`` (exact; ``a1 - a2`` must be even)."""
    _check_component(a1, a2)
    return x * (a1 * x + a2) // 2


def polygonal(m: int, x: int) -> int:
    """Generalised m-gonal number ``((m-2)x^2 - (m-4)x)/2``."""
    if m < 3:
        raise ValueError("m must be at least 3")
    return ((m - 2) * x * x - (m - 4) * x) // 2


def polygonal_component(m: int, scale: int = 1) -> Component:
    """Component of ``scale * p_m(x)``; the sign of x is normalised away."""
    return scale * (m - 2), scale * abs(m - 4)


def component_series(comp: Component, N: int) -> Series:
    a, b = comp
    _check_component(a, b)
    return theta_series(component_to_factor(a, b), N)


def components_series(comps: Iterable[Component], N: int) -> Series:
    """Representation counts of ``sum_i x_i(a_i x_i + b_i)/2`` over Z^k."""
    return product([component_series(c, N) for c in comps])


def rep_series(t: TernaryTuple, N: int) -> Series:
    """R(n) for n <= N: integer triples with tuple value n."""
    return components_series(t.components, N)


def represented(comps: Iterable[Component], N: int) -> np.ndarray:
    """Boolean mask over 0..N of values taken by the sum of components."""
    return components_series(comps, N).coeffs > 0


@dataclass(frozen=True)
class UniversalityScan:
    """Outcome of scanning ``0..bound``; ``universal`` means no gap up to the bound."""

    tuple: TernaryTuple
    bound: int
    gaps: list[int]

    @property
    def universal(self) -> bool:
        return not self.gaps


@dataclass(frozen=True)
class ExceptionalSet:
    tuple: TernaryTuple
    bound: int
    gaps: list[int]

    @property
    def largest(self) -> int | None:
        return self.gaps[-1] if self.gaps else None

    @property
    def stabilized(self) -> bool:
        """No gap in the upper half ``(bound/2, bound]``; a heuristic, not a proof."""
        return not self.gaps or 2 * self.gaps[-1] <= self.bound


def is_universal_up_to(t: TernaryTuple, N: int) -> UniversalityScan:
    return UniversalityScan(t, N, rep_series(t, N).zeros())


def exceptional_set(t: TernaryTuple, N: int) -> ExceptionalSet:
    return ExceptionalSet(t, N, rep_series(t, N).zeros())


def equivalent_components(lhs: Sequence[Component], rhs: Sequence[Component], N: int) -> bool:
    """Value sets of two component sums agree on ``0..N``."""
    return bool(np.array_equal(represented(lhs, N), represented(rhs, N)))


def equivalent_up_to(t1: TernaryTuple, t2: TernaryTuple, N: int) -> bool:
    return equivalent_components(t1.components, t2.components, N)


def first_difference(lhs: Sequence[Component], rhs: Sequence[Component], N: int) -> int | None:
    """Smallest n <= N represented by exactly one side, or None."""
    diff = np.flatnonzero(represented(lhs, N) != represented(rhs, N))
    return int(diff[0]) if diff.size else None


# --- completing the square -------------------------------------------------


@dataclass(frozen=True)
class SquareTerm:
    """``d * (m*x + r)^2`` with ``0 <= r < m``."""

    d: int
    m: int
    r: int


@dataclass(frozen=True)
class SquareReduction:
    """``M * value(x, y, z) + C == sum d_i (m_i (x_i + offset_i) + r_i)^2``.

    ``offsets`` record the change of variable needed when a linear term was
    reduced into ``[0, m)``.
    """

    M: int
    C: int
    terms: tuple[SquareTerm, SquareTerm, SquareTerm]
    offsets: tuple[int, int, int] = (0, 0, 0)

    @property
    def diagonal(self) -> tuple[int, int, int]:
        return tuple(term.d for term in self.terms)

    def rhs(self, x: int, y: int, z: int) -> int:
        return sum(
            t.d * (t.m * (v + o) + t.r) ** 2
            for t, v, o in zip(self.terms, (x, y, z), self.offsets)
        )

    def __str__(self) -> str:
        parts = []
        for t in self.terms:
            lin = f"{t.m}x+{t.r}" if t.m != 1 or t.r else "x"
            parts.append(f"{t.d}({lin})^2")
        return f"{self.M}n+{self.C} = " + " + ".join(parts)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def reduce_to_squares(t: TernaryTuple) -> SquareReduction:
    """Complete the square in each component.

    ``x(ax+b)/2 = ((2ax+b)^2 - b^2) / (8a)``; clearing denominators with
    ``A = lcm(a1, b1, c1)`` gives ``8A*value + sum (A/a_i) b_i^2`` as a sum of
    ``(A/a_i)(2a_i x + b_i)^2``.  Square factors of each ``(2a_i x + b_i)`` are
    moved into the coefficient and the common gcd is divided out.
    """
    comps = t.components
    A = reduce(_lcm, (a for a, _ in comps))
    M = 8 * A
    C = sum((A // a) * b * b for a, b in comps)
    raw = []
    offsets = []
    for a, b in comps:
        d, m, r = A // a, 2 * a, b
        g = gcd(m, r)
        d, m, r = d * g * g, m // g, r // g
        offsets.append(r // m)
        raw.append((d, m, r % m))
    G = reduce(gcd, [M, C] + [d for d, _, _ in raw])
    terms = tuple(SquareTerm(d // G, m, r) for d, m, r in raw)
    return SquareReduction(M // G, C // G, terms, tuple(offsets))
