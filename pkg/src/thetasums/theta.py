"""Ramanujan theta series f(q^i, q^j) as truncated integer series.

``f(q^i, q^j) = sum_x q^{x((i+j)x + i - j)/2}`` over all integers x, so the
coefficient of q^n counts the integers x hitting exponent n.  The named
specialisations are

    phi = f(q, q)     psi = f(q, q^3)     X = f(q, q^2)     Y = f(q, q^5)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .qseries import Series

NAMED = {
    "phi": (1, 1),
    "psi": (1, 3),
    "X": (1, 2),
    "Y": (1, 5),
}


@dataclass(frozen=True, order=True)
class ThetaFactor:
    """The factor ``f(q^i, q^j)``; requires ``i + j > 0``."""

    i: int
    j: int

    def __post_init__(self):
        if self.i + self.j <= 0:
            raise ValueError(f"f(q^{self.i}, q^{self.j}) needs i + j > 0")

    @classmethod
    def named(cls, name: str, scale: int = 1) -> "ThetaFactor":
        """``phi``/``psi``/``X``/``Y`` evaluated at ``q^scale``."""
        if name not in NAMED:
            raise KeyError(f"unknown theta function {name!r}")
        if scale < 1:
            raise ValueError("scale must be positive")
        i, j = NAMED[name]
        return cls(i * scale, j * scale)

    def scaled(self, k: int) -> "ThetaFactor":
        return ThetaFactor(self.i * k, self.j * k)

    def exponent(self, x: int) -> int:
        return x * ((self.i + self.j) * x + self.i - self.j) // 2

    def __str__(self) -> str:
        return f"f(q^{self.i},q^{self.j})"


def _window(a: int, b: int, N: int) -> tuple[int, int]:
    """Integer range containing every x with ``(a x^2 + b x)/2 <= N``."""
    # roots of a x^2 + b x - 2N; pad by one for the isqrt floor
    disc = b * b + 8 * a * N
    r = isqrt(disc) + 1
    lo = (-b - r) // (2 * a) - 1
    hi = (-b + r) // (2 * a) + 1
    return lo, hi


def theta_exponents(factor: ThetaFactor, N: int) -> np.ndarray:
    """All exponents in [0, N] hit by ``f(q^i, q^j)``, one entry per x."""
    a = factor.i + factor.j
    b = factor.i - factor.j
    lo, hi = _window(a, b, N)
    x = np.arange(lo, hi + 1, dtype=np.int64)
    e = x * (a * x + b) // 2
    return e[(e >= 0) & (e <= N)]


def theta_series(factor: ThetaFactor | tuple[int, int], N: int) -> Series:
    """Coefficients 0..N of ``f(q^i, q^j)``.

    Exponents below zero (possible when i or j is negative) fall outside the
    power series and are dropped.
    """
    if not isinstance(factor, ThetaFactor):
        factor = ThetaFactor(*factor)
    counts = np.bincount(theta_exponents(factor, N), minlength=N + 1)
    return Series._wrap(counts.astype(np.int64))


def named_series(name: str, scale: int, N: int) -> Series:
    return theta_series(ThetaFactor.named(name, scale), N)


def factor_to_component(factor: ThetaFactor | tuple[int, int]) -> tuple[int, int]:
    """``f(q^i, q^j)`` -> component ``(i + j, |i - j|)`` of ``x(a x + b)/2``."""
    if not isinstance(factor, ThetaFactor):
        factor = ThetaFactor(*factor)
    return factor.i + factor.j, abs(factor.i - factor.j)


def component_to_factor(a: int, b: int) -> ThetaFactor:
    """Inverse of :func:`factor_to_component`: ``x(a x + b)/2`` -> ``f(q^((a+b)/2), q^((a-b)/2))``."""
    if (a - b) % 2:
        raise ValueError(f"component ({a}, {b}) has a - b odd")
    return ThetaFactor((a + b) // 2, (a - b) // 2)
