"""Tuple lists and equivalences reproduced by the reports.

Each list carries the sums exactly as stated in the source; the reports scan
them and compare against the stated verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import Component, TernaryTuple


def _tuples(rows) -> tuple[TernaryTuple, ...]:
    return tuple(TernaryTuple.of(r) for r in rows)


# universal via theta-product dissections
THETA_UNIVERSAL = _tuples(
    [
        (8, 2, 5, 1, 3, 1), (8, 2, 6, 2, 3, 1), (8, 2, 6, 4, 4, 2), (8, 2, 6, 4, 6, 2),
        (8, 2, 7, 1, 3, 1), (8, 4, 4, 0, 3, 1), (8, 4, 6, 4, 4, 0), (8, 6, 5, 1, 3, 1),
        (8, 6, 6, 4, 4, 2), (8, 6, 6, 4, 6, 2), (8, 6, 7, 1, 3, 1), (9, 5, 4, 2, 2, 0),
        (9, 5, 6, 2, 3, 1), (9, 5, 8, 4, 3, 1), (9, 7, 6, 4, 3, 1), (9, 7, 8, 4, 4, 2),
    ]
    + [(9, c, 3, 1, 2, 0) for c in (1, 5, 7)]
    + [(9, c, 5, d, 3, 1) for c in (1, 5, 7) for d in (1, 3)]
    + [
        (12, 6, 6, 4, 2, 0), (12, 6, 6, 4, 4, 2), (12, 6, 8, 4, 6, 4),
        (12, 8, 4, 2, 3, 1), (12, 8, 6, 4, 6, 2), (12, 8, 9, 3, 3, 1),
        (12, 8, 12, 6, 3, 1), (16, 8, 6, 2, 2, 0), (16, 8, 8, 4, 6, 4),
    ]
)

# universal via diagonal ternary forms with known excluded sets
FORMS_UNIVERSAL = {
    "first": _tuples(
        [
            (8, 2, 3, 1, 2, 0), (8, 2, 3, 1, 3, 1), (8, 2, 4, 2, 2, 0), (8, 2, 4, 2, 4, 0),
            (8, 2, 5, 1, 4, 2), (8, 2, 5, 3, 5, 1), (8, 4, 6, 4, 6, 2), (8, 4, 8, 2, 3, 1),
            (8, 4, 8, 4, 6, 4), (8, 6, 3, 1, 2, 0), (8, 6, 4, 2, 4, 0), (8, 6, 4, 2, 4, 2),
            (8, 6, 5, 1, 4, 2), (8, 6, 8, 4, 3, 1),
        ]
    ),
    "second": _tuples(
        [
            (9, 1, 4, 2, 3, 1), (9, 3, 9, 1, 3, 1), (9, 5, 4, 2, 4, 2), (9, 5, 5, 3, 5, 1),
            (9, 5, 8, 4, 2, 0), (9, 5, 9, 3, 3, 1), (9, 7, 4, 2, 4, 2), (9, 7, 5, 3, 5, 1),
            (9, 7, 8, 4, 2, 0),
        ]
        + [(9, c, 3, 1, 3, 1) for c in (1, 5, 7)]
        + [(10, 6, 10, 2, 6, 4)]
    ),
    "third": _tuples(
        [
            (12, 4, 3, 1, 2, 0), (12, 4, 6, 4, 6, 2), (12, 8, 3, 1, 3, 1),
            (12, 6, 8, 2, 3, 1), (12, 6, 8, 6, 3, 1), (12, 8, 3, 1, 2, 0), (12, 8, 5, 3, 5, 1),
            (12, 8, 4, 2, 4, 2), (12, 8, 8, 4, 2, 0), (12, 8, 8, 4, 3, 1), (12, 8, 12, 4, 2, 0),
        ]
    ),
    "fourth": _tuples(
        [
            (16, 8, 6, 4, 4, 0), (16, 8, 6, 4, 6, 2), (18, 6, 6, 4, 6, 2),
            (20, 10, 5, 1, 4, 2), (20, 10, 5, 3, 4, 2), (24, 12, 6, 2, 2, 0),
        ]
    ),
}


def forms_universal() -> tuple[TernaryTuple, ...]:
    return tuple(t for group in FORMS_UNIVERSAL.values() for t in group)


# almost universal; the exceptional sets are not listed in the source
ALMOST_UNIVERSAL = (
    ("3x^2+3T(y)+p5(z)", TernaryTuple.of(6, 0, 3, 3, 3, 1)),
    ("3T(x)+p5(y)+z(3z+2)", TernaryTuple.of(3, 3, 3, 1, 6, 4)),
    ("3x^2+2y(y+1)+p5(z)", TernaryTuple.of(6, 0, 4, 4, 3, 1)),
    ("2x(x+1)+p5(y)+z(3z+2)", TernaryTuple.of(4, 4, 3, 1, 6, 4)),
    ("2x^2+3y^2+p5(z)", TernaryTuple.of(4, 0, 6, 0, 3, 1)),
    ("2x^2+p5(y)+z(3z+2)", TernaryTuple.of(4, 0, 3, 1, 6, 4)),
    ("x(x+1)+y(3y+1)+p5(z)", TernaryTuple.of(2, 2, 6, 2, 3, 1)),
    ("x(x+1)+3y(y+1)+p5(z)", TernaryTuple.of(2, 2, 6, 6, 3, 1)),
    ("2x^2+y(3y+1)+p5(z)", TernaryTuple.of(4, 0, 6, 2, 3, 1)),
    ("2x^2+3y(y+1)+p5(z)", TernaryTuple.of(4, 0, 6, 6, 3, 1)),
)

# a T(x) + b T(y) + c T(z) universal, a <= b <= c
LIOUVILLE = ((1, 1, 1), (1, 1, 2), (1, 1, 4), (1, 1, 5), (1, 2, 2), (1, 2, 3), (1, 2, 4))

# (b, c) with p5(x) + b p5(y) + c p5(z) universal
PENTAGONAL_PAIRS = (
    tuple((1, c) for c in range(1, 11) if c != 7)
    + tuple((2, c) for c in (2, 3, 4, 6, 8))
    + tuple((3, c) for c in (3, 4, 6, 7, 8, 9))
)


def triangular_tuple(a: int, b: int, c: int) -> TernaryTuple:
    """``a T(x) + b T(y) + c T(z)`` with ``T(x) = x(x+1)/2``."""
    return TernaryTuple.of(a, a, b, b, c, c)


def pentagonal_tuple(b: int, c: int) -> TernaryTuple:
    """``p5(x) + b p5(y) + c p5(z)``."""
    return TernaryTuple.of(3, 1, 3 * b, b, 3 * c, c)


@dataclass(frozen=True)
class Equivalence:
    name: str
    lhs: tuple[Component, ...]
    rhs: tuple[Component, ...]
    statement: str


def _shift_lemma(a: int, b: int) -> Equivalence:
    # x(ax+b) + y(ay+a-b)  ~  a T(x) + y(ay+a-2b)/2, needs 0 <= b <= a/2
    return Equivalence(
        f"shift-lemma(a={a},b={b})",
        ((2 * a, 2 * b), (2 * a, 2 * (a - b))),
        ((a, a), (a, a - 2 * b)),
        f"x({a}x+{b}) + y({a}y+{a - b}) ~ {a}T(x) + y({a}y+{a - 2 * b})/2",
    )


SHIFT_LEMMA_CASES = ((1, 0), (2, 1), (3, 1), (4, 1), (4, 2), (5, 2))

EQUIVALENCES = (
    Equivalence("euler", ((1, 1), (1, 1)), ((2, 0), (2, 2)), "T(x)+T(y) ~ x^2+2T(y)"),
    Equivalence("triangular-pentagonal", ((1, 1), (3, 1)), ((3, 1), (9, 3)), "T(x)+p5(y) ~ p5(x)+3p5(y)"),
    *(_shift_lemma(a, b) for a, b in SHIFT_LEMMA_CASES),
    Equivalence("octagonal", ((6, 2), (6, 4)), ((3, 3), (3, 1)), "2p5(x)+p8(y) ~ 3T(x)+p5(y)"),
    Equivalence("square-triangular", ((2, 0), (1, 1)), ((3, 1), (6, 2)), "x^2+T(y) ~ p5(x)+2p5(y)"),
    Equivalence("triangular-pair", ((1, 1), (2, 2)), ((3, 1), (6, 4)), "T(x)+2T(y) ~ p5(x)+p8(y)"),
    Equivalence("square-four-triangular", ((2, 0), (4, 4)), ((12, 4), (6, 4)), "x^2+4T(y) ~ 4p5(x)+p8(y)"),
    Equivalence("five-one-three", ((1, 1), (1, 1)), ((5, 1), (5, 3)), "T(x)+T(y) ~ x(5x+1)/2+y(5y+3)/2"),
)
