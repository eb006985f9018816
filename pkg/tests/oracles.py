"""Independent brute-force references used by the tests.

Nothing here touches the series code: values are enumerated directly.
"""

from __future__ import annotations

from math import isqrt

import numpy as np


def theta_direct(i: int, j: int, N: int) -> list[int]:
    """Coefficients of sum_x q^(x((i+j)x + i - j)/2) by a plain loop over x."""
    out = [0] * (N + 1)
    a, b = i + j, i - j
    span = abs(b) + isqrt(2 * N) + 2
    for x in range(-span, span + 1):
        e = x * (a * x + b) // 2
        if 0 <= e <= N:
            out[e] += 1
    return out


def _component_values(a: int, b: int, N: int) -> np.ndarray:
    span = abs(b) + isqrt(2 * N // a + 1) + 2
    x = np.arange(-span, span + 1, dtype=np.int64)
    v = x * (a * x + b) // 2
    return v[(v >= 0) & (v <= N)]


def rep_counts_brute(comps, N: int) -> np.ndarray:
    """Count integer triples by enumerating the full grid of admissible values."""
    (a1, b1), (a2, b2), (a3, b3) = comps
    u = _component_values(a1, b1, N)
    v = _component_values(a2, b2, N)
    w = _component_values(a3, b3, N)
    total = u[:, None, None] + v[None, :, None] + w[None, None, :]
    total = total[total <= N]
    return np.bincount(total, minlength=N + 1)


def diag_counts_brute(a: int, b: int, c: int, N: int) -> list[int]:
    """Triple loop over x, y, z for a x^2 + b y^2 + c z^2."""
    out = [0] * (N + 1)
    rx, ry, rz = isqrt(N // a), isqrt(N // b), isqrt(N // c)
    for x in range(-rx, rx + 1):
        vx = a * x * x
        for y in range(-ry, ry + 1):
            vy = vx + b * y * y
            if vy > N:
                continue
            for z in range(-rz, rz + 1):
                v = vy + c * z * z
                if v <= N:
                    out[v] += 1
    return out


def values_brute(comps, N: int) -> set[int]:
    """Value set of a sum of components over Z^k, capped at N."""
    vals = {0}
    for a, b in comps:
        vals = {s + t for s in vals for t in _component_values(a, b, N).tolist() if s + t <= N}
    return vals


def convolve_naive(s: list[int], t: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(s[: N + 1]):
        if x:
            for j, y in enumerate(t[: N + 1 - i]):
                out[i + j] += x * y
    return out
