import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import rep_counts_brute, values_brute
from thetasums.forms import (
    TernaryTuple,
    component_value,
    equivalent_components,
    equivalent_up_to,
    exceptional_set,
    first_difference,
    is_universal_up_to,
    polygonal,
    polygonal_component,
    reduce_to_squares,
    rep_series,
)


@st.composite
def components(draw, max_a=12):
    a = draw(st.integers(1, max_a))
    b = draw(st.integers(-a, a).filter(lambda b: (a - b) % 2 == 0))
    return a, b


@st.composite
def tuples(draw, max_a=12):
    return TernaryTuple.from_components([draw(components(max_a)) for _ in range(3)])


def test_parity_and_sign_validation():
    with pytest.raises(ValueError):
        TernaryTuple.of(8, 1, 4, 2, 4, 2)
    with pytest.raises(ValueError):
        TernaryTuple.of(0, 0, 4, 2, 4, 2)
    with pytest.raises(ValueError):
        TernaryTuple.of(1, 2, 3)


def test_canonical_order():
    t = TernaryTuple.of(4, 2, 10, -2, 6, 2)
    assert t.canonical().astuple() == (10, 2, 6, 2, 4, 2)
    assert str(t.canonical()) == "(10,2,6,2,4,2)"


def test_polygonal_numbers():
    assert [polygonal(3, x) for x in range(5)] == [0, 1, 3, 6, 10]
    assert [polygonal(5, x) for x in (-2, -1, 0, 1, 2)] == [7, 2, 0, 1, 5]
    assert polygonal_component(5) == (3, 1)
    assert polygonal_component(8) == (6, 4)
    assert polygonal_component(3, 2) == (2, 2)
    assert component_value(3, 1, -2) == 5


def test_known_universal_tuple():
    scan = is_universal_up_to(TernaryTuple.of(8, 6, 4, 2, 4, 2), 100_000)
    assert scan.universal and scan.bound == 100_000


def test_three_squares_gaps():
    # x^2 + y^2 + z^2 misses exactly 4^a(8b+7)
    scan = is_universal_up_to(TernaryTuple.of(2, 0, 2, 0, 2, 0), 100)
    assert 7 in scan.gaps
    assert scan.gaps == [7, 15, 23, 28, 31, 39, 47, 55, 60, 63, 71, 79, 87, 92, 95]


def test_exceptional_set_stabilizes():
    e = exceptional_set(TernaryTuple.of(2, 2, 6, 6, 3, 1), 20_000)
    assert e.gaps == [16] and e.largest == 16 and e.stabilized


def test_exceptional_set_unstable_for_three_squares():
    e = exceptional_set(TernaryTuple.of(2, 0, 2, 0, 2, 0), 1000)
    assert not e.stabilized


def test_equivalences_basic():
    T, p5 = (1, 1), (3, 1)
    assert equivalent_components([T, p5], [p5, (9, 3)], 10_000)
    assert equivalent_components([T, T], [(5, 1), (5, 3)], 10_000)
    assert equivalent_components([T, T], [T, T], 100)
    assert first_difference([T, T], [(2, 0), (2, 0)], 100) == 3


def test_equivalent_up_to_tuples():
    t = TernaryTuple.of(8, 2, 5, 1, 3, 1)
    assert equivalent_up_to(t, t.canonical(), 5000)


@given(tuples())
def test_canonical_preserves_counts(t):
    assert rep_series(t, 300) == rep_series(t.canonical(), 300)


@given(tuples(max_a=6))
def test_rep_series_matches_brute_force(t):
    got = rep_series(t, 400).coeffs
    assert np.array_equal(got, rep_counts_brute(t.components, 400))


@given(tuples(max_a=8), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_value_is_represented(t, x, y, z):
    n = t.value(x, y, z)
    assume(0 <= n <= 4000)
    assert rep_series(t, n).coeff(n) > 0


@given(tuples(max_a=6))
def test_value_sets_agree_with_enumeration(t):
    mask = rep_series(t, 150).coeffs > 0
    assert set(np.flatnonzero(mask).tolist()) == values_brute(t.components, 150)


# --- completing the square


def test_reduction_examples():
    red = reduce_to_squares(TernaryTuple.of(3, 1, 3, 1, 9, 1))
    assert (red.M, red.C) == (72, 7)
    assert red.diagonal == (3, 3, 1)
    assert [(t.m, t.r) for t in red.terms] == [(6, 1), (6, 1), (18, 1)]

    red = reduce_to_squares(TernaryTuple.of(2, 0, 2, 0, 2, 0))
    assert (red.M, red.C, red.diagonal) == (1, 0, (1, 1, 1))

    red = reduce_to_squares(TernaryTuple.of(8, 6, 4, 2, 4, 2))
    assert (red.M, red.C) == (16, 13)
    assert [(t.d, t.m, t.r) for t in red.terms] == [(1, 8, 3), (2, 4, 1), (2, 4, 1)]

    red = reduce_to_squares(TernaryTuple.of(8, 2, 3, 1, 2, 0))
    assert (red.M, red.C, red.diagonal) == (48, 5, (3, 2, 48))


def test_reduction_str():
    assert str(reduce_to_squares(TernaryTuple.of(3, 1, 3, 1, 9, 1))) == (
        "72n+7 = 3(6x+1)^2 + 3(6x+1)^2 + 1(18x+1)^2"
    )


@given(tuples(), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_reduction_is_an_identity(t, x, y, z):
    red = reduce_to_squares(t)
    assert red.M * t.value(x, y, z) + red.C == red.rhs(x, y, z)
