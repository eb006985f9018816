"""Diagonal ternary forms ``ax^2 + by^2 + cz^2``: excluded sets and congruence-constrained search.

The excluded set ``E(a, b, c)`` is the set of nonnegative integers *not*
represented over Z^3.  :class:`ExclusionRule` describes such a set in closed
form as a union of progressions ``{M k + rho}`` and scaled families
``{u^s (v t + w)}`` (s, t >= 0); :func:`verify_dickson` checks a rule against
a brute-force scan.

:func:`reduction_bridge` ties a ternary tuple to its diagonal form: n is
represented by the tuple exactly when ``M n + C`` has a representation whose
variables satisfy the residue conditions produced by completing the square.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .forms import SquareReduction, TernaryTuple, reduce_to_squares, rep_series
from .qseries import Series, product
from .theta import ThetaFactor, theta_series


@dataclass(frozen=True)
class DiagonalForm:
    """``a x^2 + b y^2 + c z^2``, coefficients kept in variable order."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError(f"coefficients must be positive: {self.coefficients}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def canonical(self) -> "DiagonalForm":
        return DiagonalForm(*sorted(self.coefficients))

    def value(self, x: int, y: int, z: int) -> int:
        return self.a * x * x + self.b * y * y + self.c * z * z

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def rep_series_diag(f: DiagonalForm, N: int) -> Series:
    """Representation counts of ``f`` over Z^3: the product ``phi(q^a) phi(q^b) phi(q^c)``."""
    return product([theta_series(ThetaFactor(d, d), N) for d in f.coefficients])


def empirical_excluded(f: DiagonalForm, N: int) -> list[int]:
    return rep_series_diag(f, N).zeros()


# --- closed-form excluded sets -----------------------------------------------


@dataclass(frozen=True)
class ExclusionRule:
    form: DiagonalForm
    residue_families: tuple[tuple[int, int], ...] = ()
    scaled_families: tuple[tuple[int, int, int], ...] = ()
    source: str = ""
    note: str = ""

    def __contains__(self, n: int) -> bool:
        return rule_excluded(self, n)

    def excluded_up_to(self, N: int) -> list[int]:
        return [n for n in range(N + 1) if rule_excluded(self, n)]

    def describe(self) -> str:
        parts = [f"{M}k+{rho}" for M, rho in self.residue_families]
        parts += [f"{u}^s({v}t+{w})" for u, v, w in self.scaled_families]
        return "E" + str(self.form) + " = " + " | ".join(parts)

    def to_json(self) -> dict:
        out = {
            "form": list(self.form.coefficients),
            "residue_families": [list(f) for f in self.residue_families],
            "scaled_families": [list(f) for f in self.scaled_families],
            "source": self.source,
        }
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, doc: dict) -> "ExclusionRule":
        return cls(
            DiagonalForm(*doc["form"]),
            tuple(tuple(f) for f in doc.get("residue_families", [])),
            tuple(tuple(f) for f in doc.get("scaled_families", [])),
            doc.get("source", ""),
            doc.get("note", ""),
        )


def _in_progression(n: int, modulus: int, residue: int) -> bool:
    return n >= residue and (n - residue) % modulus == 0


def rule_excluded(rule: ExclusionRule, n: int) -> bool:
    """Membership of n in the closed-form excluded set (exact, O(log n))."""
    if n < 0:
        return False
    for M, rho in rule.residue_families:
        if _in_progression(n, M, rho):
            return True
    for u, v, w in rule.scaled_families:
        m = n
        while True:
            if _in_progression(m, v, w):
                return True
            if m == 0 or m % u:
                break
            m //= u
    return False


@dataclass(frozen=True)
class DicksonCheck:
    form: DiagonalForm
    bound: int
    ok: bool
    witness: int | None = None
    empirically_excluded: bool | None = None


def verify_dickson(f: DiagonalForm, rule: ExclusionRule, N: int) -> DicksonCheck:
    """Compare the rule with the scanned excluded set on ``0..N``.

    On disagreement, ``witness`` is the smallest n where they differ and
    ``empirically_excluded`` tells which side is right.
    """
    scanned = rep_series_diag(f, N).coeffs == 0
    for n in range(N + 1):
        if bool(scanned[n]) != rule_excluded(rule, n):
            return DicksonCheck(f, N, False, n, bool(scanned[n]))
    return DicksonCheck(f, N, True)


def load_rules(path: str | Path | None = None) -> list[ExclusionRule]:
    from .catalog import rules_path

    with open(path or rules_path(), encoding="utf-8") as fh:
        return [ExclusionRule.from_json(doc) for doc in json.load(fh)]


# --- congruence-constrained representations ---------------------------------


@dataclass(frozen=True)
class CongruenceConstraint:
    """Per-variable residue conditions ``x_i mod m_i in R_i``.

    With ``symmetric`` set, each residue set is closed under negation, i.e.
    the condition reads "x or -x lies in the class".
    """

    moduli: tuple[int, int, int]
    residues: tuple[frozenset, frozenset, frozenset]
    symmetric: bool = True

    def __post_init__(self):
        if len(self.moduli) != 3 or len(self.residues) != 3:
            raise ValueError("one modulus and residue set per variable")
        closed = []
        for m, rs in zip(self.moduli, self.residues):
            if m < 1:
                raise ValueError("moduli must be positive")
            rs = frozenset(r % m for r in rs)
            if self.symmetric:
                rs = rs | frozenset((-r) % m for r in rs)
            closed.append(rs)
        object.__setattr__(self, "residues", tuple(closed))

    @classmethod
    def build(cls, spec: Sequence[tuple[int, Iterable[int]]], symmetric: bool = True):
        return cls(
            tuple(m for m, _ in spec),
            tuple(frozenset(rs) for _, rs in spec),
            symmetric,
        )

    @classmethod
    def unconstrained(cls) -> "CongruenceConstraint":
        return cls((1, 1, 1), (frozenset({0}),) * 3)

    def allows(self, i: int, w: int) -> bool:
        return w % self.moduli[i] in self.residues[i]


def constraints_from_reduction(red: SquareReduction) -> CongruenceConstraint:
    return CongruenceConstraint(
        tuple(t.m for t in red.terms),
        tuple(frozenset({t.r}) for t in red.terms),
        symmetric=True,
    )


def _allowed_magnitudes(d: int, limit: int, m: int, residues: frozenset) -> np.ndarray:
    """``|w|`` values with ``d w^2 <= limit`` such that w or -w is allowed."""
    w = np.arange(isqrt(limit // d) + 1, dtype=np.int64)
    res = np.fromiter(sorted(residues), dtype=np.int64)
    ok = np.isin(w % m, res) | np.isin((-w) % m, res)
    return w[ok]


def constrained_rep_exists(
    f: DiagonalForm | Sequence[int], n: int, constraints: CongruenceConstraint
) -> bool:
    """Exhaustive search for ``n = a x^2 + b y^2 + c z^2`` meeting the residue conditions.

    Variables may be negative; since only squares enter the form, a value w
    is usable for variable i when w or -w is in the allowed class.
    """
    if not isinstance(f, DiagonalForm):
        f = DiagonalForm(*f)
    if n < 0:
        return False
    a, b, c = f.coefficients
    ms, rs = constraints.moduli, constraints.residues
    w1 = _allowed_magnitudes(a, n, ms[0], rs[0])
    w2 = _allowed_magnitudes(b, n, ms[1], rs[1])
    w3 = _allowed_magnitudes(c, n, ms[2], rs[2])
    if not (w1.size and w2.size and w3.size):
        return False
    third = np.zeros(isqrt(n // c) + 1, dtype=bool)
    third[w3] = True
    rem = n - a * w1[:, None] ** 2 - b * w2[None, :] ** 2
    rem = rem[(rem >= 0) & (rem % c == 0)] // c
    if rem.size == 0:
        return False
    root = np.floor(np.sqrt(rem.astype(np.float64))).astype(np.int64)
    root += ((root + 1) ** 2 <= rem).astype(np.int64)
    root -= (root**2 > rem).astype(np.int64)
    hit = (root**2 == rem) & (root < third.size)
    return bool(third[root[hit]].any())


@dataclass(frozen=True)
class BridgeResult:
    tuple: TernaryTuple
    reduction: SquareReduction
    bound: int
    ok: bool
    witness: int | None = None
    # n <= bound with M n + C in the form's excluded set
    uncovered: list[int] = field(default_factory=list)


def reduction_bridge(t: TernaryTuple, N: int) -> BridgeResult:
    """Check, for every n <= N, that n is a value of ``t`` iff ``M n + C`` has a
    constrained representation by the reduced diagonal form.

    Also records which ``M n + C`` are not represented by the diagonal form at
    all; for a universal tuple that list is empty and the closed-form excluded
    set is what guarantees it.
    """
    red = reduce_to_squares(t)
    cons = constraints_from_reduction(red)
    form = DiagonalForm(*red.diagonal)
    values = rep_series(t, N).coeffs > 0
    plain = rep_series_diag(form, red.M * N + red.C).coeffs
    uncovered = [n for n in range(N + 1) if plain[red.M * n + red.C] == 0]
    for n in range(N + 1):
        if constrained_rep_exists(form, red.M * n + red.C, cons) != bool(values[n]):
            return BridgeResult(t, red, N, False, n, uncovered)
    return BridgeResult(t, red, N, True, None, uncovered)


# --- re-representation lemmas ------------------------------------------------


class LemmaOutcome(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"

    def __bool__(self) -> bool:
        return self is LemmaOutcome.HOLDS


def binary_reps(w: int, m: int) -> Iterable[tuple[int, int]]:
    """Nonnegative ``(u, v)`` with ``u^2 + m v^2 == w``."""
    if w < 0:
        return
    for v in range(isqrt(w // m) + 1):
        rest = w - m * v * v
        u = isqrt(rest)
        if u * u == rest:
            yield u, v


def _coprime6(x: int) -> bool:
    return x % 2 == 1 and x % 3 != 0


def check_odd_pair_rerep(w: int) -> LemmaOutcome:
    """``w = x^2 + 3y^2 == 4 (mod 8)`` admits ``w = u^2 + 3v^2`` with u, v odd."""
    if w % 8 != 4 or next(binary_reps(w, 3), None) is None:
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    if any(u % 2 and v % 2 for u, v in binary_reps(w, 3)):
        return LemmaOutcome.HOLDS
    return LemmaOutcome.FAILS


def check_coprime_six_rerep(w: int) -> LemmaOutcome:
    """``w = x^2 + 3y^2`` with x, y odd and 3 not dividing x admits u, v prime to 6."""
    reps = list(binary_reps(w, 3))
    if not any(x % 2 and y % 2 and x % 3 for x, y in reps):
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    if any(_coprime6(u) and _coprime6(v) for u, v in reps):
        return LemmaOutcome.HOLDS
    return LemmaOutcome.FAILS


def check_not_both_div3_rerep(w: int, m: int) -> LemmaOutcome:
    """Positive ``w = x^2 + m y^2`` (m in {2, 5, 8}) admits u, v not both divisible by 3."""
    if m not in (2, 5, 8):
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    reps = list(binary_reps(w, m))
    if w <= 0 or not reps:
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    if any(u % 3 or v % 3 for u, v in reps):
        return LemmaOutcome.HOLDS
    return LemmaOutcome.FAILS


def two_squares_table(limit: int) -> np.ndarray:
    """Boolean mask over ``0..limit`` of sums of two squares."""
    phi = theta_series(ThetaFactor(1, 1), limit)
    return product([phi, phi]).coeffs > 0


def _three_squares_not_all_div3(
    n: int, table: np.ndarray | None = None
) -> tuple[int, int, int] | None:
    """Some ``(u, v, w)`` with ``u^2+v^2+w^2 == n`` and not all divisible by 3."""
    # by symmetry the non-multiple of 3 can be placed first
    u = np.arange(isqrt(n) + 1)
    u = u[u % 3 != 0]
    if table is None or table.size <= n:
        table = two_squares_table(n)
    hits = np.flatnonzero(table[n - u * u])
    if hits.size == 0:
        return None
    first = int(u[hits[0]])
    v, w = next(binary_reps(n - first * first, 1))
    return first, v, w


def check_nine_times_rerep(
    x: int, y: int, z: int, table: np.ndarray | None = None
) -> LemmaOutcome:
    """x, y, z not all divisible by 3 => ``9(x^2+y^2+z^2)`` has such a representation too."""
    if x % 3 == 0 and y % 3 == 0 and z % 3 == 0:
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    n = x * x + y * y + z * z
    if _three_squares_not_all_div3(9 * n, table) is not None:
        return LemmaOutcome.HOLDS
    return LemmaOutcome.FAILS


@dataclass(frozen=True)
class LemmaSweep:
    name: str
    limit: int
    checked: int
    failures: list


def lemma_sweeps(limit: int = 10_000) -> list[LemmaSweep]:
    """Run each re-representation checker on every hypothesis-satisfying input up to ``limit``.

    For the nine-times lemma the conclusion depends only on ``x^2+y^2+z^2``,
    so one witness triple is checked for each attainable value.
    """
    out = []
    for name, fn in (("odd-pair", check_odd_pair_rerep), ("coprime-six", check_coprime_six_rerep)):
        checked, failures = 0, []
        for w in range(1, limit + 1):
            res = fn(w)
            if res is LemmaOutcome.HYPOTHESIS_NOT_MET:
                continue
            checked += 1
            if res is LemmaOutcome.FAILS:
                failures.append(w)
        out.append(LemmaSweep(name, limit, checked, failures))

    checked, failures = 0, []
    for m in (2, 5, 8):
        for w in range(1, limit + 1):
            res = check_not_both_div3_rerep(w, m)
            if res is LemmaOutcome.HYPOTHESIS_NOT_MET:
                continue
            checked += 1
            if res is LemmaOutcome.FAILS:
                failures.append((w, m))
    out.append(LemmaSweep("not-both-div3", limit, checked, failures))

    checked, failures = 0, []
    table = two_squares_table(9 * limit)
    for n in range(1, limit + 1):
        triple = _three_squares_not_all_div3(n, table)
        if triple is None:
            continue
        checked += 1
        if check_nine_times_rerep(*triple, table=table) is LemmaOutcome.FAILS:
            failures.append(triple)
    out.append(LemmaSweep("nine-times", limit, checked, failures))
    return out
