"""Truncated power series with exact, overflow-checked int64 coefficients.

A :class:`Series` holds coefficients ``c[0..N]`` of a q-series truncated at
order ``N`` (inclusive).  All arithmetic is exact: whenever an int64 fast path
could wrap around, the operation either proves a bound first or recomputes
with Python integers and raises :class:`SeriesOverflowError` if the true
result does not fit.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

INT64_MAX = int(np.iinfo(np.int64).max)
INT64_MIN = int(np.iinfo(np.int64).min)

# pairwise-product path is used when both operands are this sparse
_OUTER_LIMIT = 1 << 24
# float64 accumulation is exact below this magnitude
_FLOAT_EXACT = 1 << 52


class SeriesOverflowError(OverflowError):
    """A coefficient left the signed 64-bit range."""


class OrderMismatchError(ValueError):
    """Binary operation on series truncated at different orders."""


class Series:
    """Immutable truncated integer power series ``sum c[n] q^n, n <= order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] | np.ndarray):
        if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
            arr = np.array(coeffs, dtype=np.int64, copy=True)
        else:
            values = list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs.tolist()
            for v in values:
                if int(v) != v:
                    raise TypeError(f"non-integer coefficient {v!r}")
                if not INT64_MIN <= int(v) <= INT64_MAX:
                    raise SeriesOverflowError(f"coefficient {v} outside int64 range")
            arr = np.array([int(v) for v in values], dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a series needs at least one coefficient")
        arr.setflags(write=False)
        self._c = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Series":
        # trusted constructor: arr is a fresh int64 array nobody else holds
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._c = arr
        return obj

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls._wrap(np.zeros(order + 1, dtype=np.int64))

    @classmethod
    def one(cls, order: int) -> "Series":
        arr = np.zeros(order + 1, dtype=np.int64)
        arr[0] = 1
        return cls._wrap(arr)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "Series":
        arr = np.zeros(order + 1, dtype=np.int64)
        if exponent <= order:
            arr[exponent] = coeff
        return cls._wrap(arr)

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only int64 view of the coefficients."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def coeff(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside 0..{self.order}")
        return int(self._c[n])

    def support(self) -> np.ndarray:
        """Exponents with a nonzero coefficient."""
        return np.flatnonzero(self._c)

    def tolist(self) -> list[int]:
        return self._c.tolist()

    def zeros(self) -> list[int]:
        """Exponents whose coefficient vanishes."""
        return np.flatnonzero(self._c == 0).tolist()

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.order, self._c.tobytes()))

    def __repr__(self) -> str:
        head = self._c[:8].tolist()
        more = ", ..." if self.order >= 8 else ""
        return f"Series({head}{more}; order={self.order})"

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        return NotImplemented

    __rmul__ = __mul__


def _check_orders(s: Series, t: Series) -> None:
    if s.order != t.order:
        raise OrderMismatchError(f"orders differ: {s.order} vs {t.order}")


def _from_objects(values: np.ndarray) -> Series:
    """Convert a Python-int result back to int64, raising on overflow."""
    out = np.empty(values.size, dtype=np.int64)
    for n, v in enumerate(values.tolist()):
        v = int(v)
        if not INT64_MIN <= v <= INT64_MAX:
            raise SeriesOverflowError(f"coefficient of q^{n} is {v}, outside int64")
        out[n] = v
    return Series._wrap(out)


def add(s: Series, t: Series) -> Series:
    _check_orders(s, t)
    a, b = s.coeffs, t.coeffs
    with np.errstate(over="ignore"):
        r = a + b
    wrapped = ((a > 0) & (b > 0) & (r < 0)) | ((a < 0) & (b < 0) & (r >= 0))
    if wrapped.any():
        n = int(np.flatnonzero(wrapped)[0])
        raise SeriesOverflowError(f"sum overflows at q^{n}")
    return Series._wrap(r)


def scale(s: Series, c: int) -> Series:
    c = int(c)
    if _abs_max(s.coeffs) * abs(c) > INT64_MAX:
        return _from_objects(s.coeffs.astype(object) * c)
    return Series._wrap(s.coeffs * np.int64(c))


def shift(s: Series, d: int) -> Series:
    """Multiply by ``q^d`` and truncate back to the same order."""
    if d < 0 or d > s.order:
        raise ValueError(f"shift {d} outside 0..{s.order}")
    out = np.zeros_like(s.coeffs)
    out[d:] = s.coeffs[: s.order + 1 - d]
    return Series._wrap(out)


def _abs_max(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(int(arr.max()), -int(arr.min()))


def _abs_sum(arr: np.ndarray) -> int:
    if _abs_max(arr) * arr.size <= INT64_MAX:
        return int(np.abs(arr).sum())
    return int(np.abs(arr.astype(object)).sum())


def mul(s: Series, t: Series) -> Series:
    """Cauchy product truncated at the common order.

    The sparser operand is walked term by term and each nonzero term adds a
    shifted slice of the other operand, so the cost is
    ``nnz(sparser) * order``.  When both operands are sparse the product is
    formed from all pairwise exponent sums instead.
    """
    _check_orders(s, t)
    order = s.order
    sa, ta = s.support(), t.support()
    if sa.size > ta.size:
        s, t, sa, ta = t, s, ta, sa
    if sa.size == 0:
        return Series.zero(order)
    sv = s.coeffs[sa]
    # |coefficient| of the product never exceeds sum|s| * max|t|
    bound = _abs_sum(sv) * _abs_max(t.coeffs[ta])

    if bound <= INT64_MAX and sa.size * ta.size <= _OUTER_LIMIT:
        tv = t.coeffs[ta]
        exps = sa[:, None] + ta[None, :]
        weights = sv[:, None] * tv[None, :]
        keep = exps <= order
        exps, weights = exps[keep], weights[keep]
        if _abs_sum(sv) * _abs_sum(tv) < _FLOAT_EXACT:
            acc = np.bincount(exps, weights=weights, minlength=order + 1)
            return Series._wrap(np.rint(acc).astype(np.int64))
        out = np.zeros(order + 1, dtype=np.int64)
        np.add.at(out, exps, weights)
        return Series._wrap(out)

    dense = t.coeffs
    if bound <= INT64_MAX:
        out = np.zeros(order + 1, dtype=np.int64)
    else:
        dense = dense.astype(object)
        out = np.zeros(order + 1, dtype=object)
    for e, c in zip(sa.tolist(), sv.tolist()):
        if c == 1:
            out[e:] += dense[: order + 1 - e]
        else:
            out[e:] += c * dense[: order + 1 - e]
    if out.dtype == object:
        return _from_objects(out)
    return Series._wrap(out)


def product(factors: Sequence[Series]) -> Series:
    """Multiply several series, densest first so that the last factor is sparse."""
    if not factors:
        raise ValueError("empty product")
    ordered = sorted(factors, key=lambda f: -np.count_nonzero(f.coeffs))
    acc = ordered[0]
    for f in ordered[1:]:
        acc = mul(acc, f)
    return acc


def extract_progression(s: Series, k: int, r: int) -> Series:
    """Coefficients at exponents ``k*n + r``: the ``(k, r)`` piece of a k-dissection."""
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 <= r < k:
        raise ValueError(f"residue {r} outside 0..{k - 1}")
    if r > s.order:
        raise ValueError(f"residue {r} exceeds order {s.order}")
    return Series._wrap(np.array(s.coeffs[r::k], dtype=np.int64))


def truncate(s: Series, order: int) -> Series:
    if order > s.order:
        raise ValueError(f"cannot extend order {s.order} to {order}")
    return Series._wrap(np.array(s.coeffs[: order + 1], dtype=np.int64))
