import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import convolve_naive
from thetasums.qseries import (
    INT64_MAX,
    OrderMismatchError,
    Series,
    SeriesOverflowError,
    add,
    extract_progression,
    mul,
    product,
    scale,
    shift,
    truncate,
)

small = st.integers(-50, 50)


@st.composite
def series_pair(draw, max_order=40):
    n = draw(st.integers(0, max_order))
    s = draw(st.lists(small, min_size=n + 1, max_size=n + 1))
    t = draw(st.lists(small, min_size=n + 1, max_size=n + 1))
    return Series(s), Series(t)


def test_constructors():
    assert Series.one(3).tolist() == [1, 0, 0, 0]
    assert Series.zero(2).tolist() == [0, 0, 0]
    assert Series.monomial(2, 4, 7).tolist() == [0, 0, 7, 0, 0]
    assert Series.monomial(9, 4).tolist() == [0] * 5


def test_rejects_non_integer_and_out_of_range():
    with pytest.raises(TypeError):
        Series([1.5, 2])
    with pytest.raises(SeriesOverflowError):
        Series([INT64_MAX + 1])


def test_coeffs_read_only():
    s = Series([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        add(Series([1, 2]), Series([1, 2, 3]))


def test_zeros_and_support():
    s = Series([1, 0, 2, 0])
    assert s.zeros() == [1, 3]
    assert s.support().tolist() == [0, 2]


def test_add_overflow_detected():
    big = Series([INT64_MAX, 0])
    with pytest.raises(SeriesOverflowError):
        add(big, Series([1, 0]))


def test_mul_overflow_detected():
    big = Series([2**40, 2**40])
    with pytest.raises(SeriesOverflowError):
        mul(big, big)


def test_scale_overflow_detected():
    with pytest.raises(SeriesOverflowError):
        scale(Series([2**62]), 4)


def test_shift_and_truncate():
    s = Series([1, 2, 3, 4])
    assert shift(s, 1).tolist() == [0, 1, 2, 3]
    assert truncate(s, 1).tolist() == [1, 2]
    with pytest.raises(ValueError):
        shift(s, 5)


def test_extract_progression():
    s = Series(list(range(10)))
    assert extract_progression(s, 3, 1).tolist() == [1, 4, 7]


def test_product_of_geometric_factors():
    # (1 + q)^5 truncated
    s = product([Series([1, 1, 0, 0, 0, 0])] * 5)
    assert s.tolist() == [1, 5, 10, 10, 5, 1]


@given(series_pair())
def test_mul_matches_naive_convolution(pair):
    s, t = pair
    assert mul(s, t).tolist() == convolve_naive(s.tolist(), t.tolist(), s.order)


@given(series_pair())
def test_mul_commutes(pair):
    s, t = pair
    assert mul(s, t) == mul(t, s)


@given(series_pair(), st.integers(-5, 5))
def test_distributes_over_add(pair, c):
    s, t = pair
    u = scale(t, c)
    assert mul(s, add(t, u)) == add(mul(s, t), mul(s, u))


@given(series_pair(max_order=25), st.data())
def test_mul_associative(pair, data):
    s, t = pair
    u = Series(data.draw(st.lists(small, min_size=s.order + 1, max_size=s.order + 1)))
    assert mul(mul(s, t), u) == mul(s, mul(t, u))


@given(st.integers(1, 400), st.integers(1, 400))
def test_sparse_path_matches_dense(n, m):
    # sparse lacunary operands exercise the outer-sum path
    N = 3000
    s = Series(np.bincount([0, n, 4 * n], minlength=N + 1)[: N + 1])
    t = Series(np.bincount([0, m, 9 * m], minlength=N + 1)[: N + 1])
    assert mul(s, t).tolist() == convolve_naive(s.tolist(), t.tolist(), N)


def test_operators():
    s = Series([1, 1, 0])
    assert (s * s).tolist() == [1, 2, 1]
    assert (s + s).tolist() == [2, 2, 0]
    assert (s * 3).tolist() == [3, 3, 0]
