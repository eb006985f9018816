"""Theta-product identities and the dissection law for representation counts.

An :class:`IdentityRecord` states

    prod(lhs) = sum_r  m_r q^{shift_r} prod(rhs_r)

with every factor a theta function f(q^i, q^j).  When the rhs factors are all
in q^k and the shifts run over 0..k-1, the identity is a k-dissection: the
coefficient of q^{kn + shift_r} on the left is m_r times the coefficient of
q^{kn} in prod(rhs_r), which (after q^k -> q) is the representation count of
a smaller ternary tuple.  So for three-factor records

    R_lhs(k n + shift_r) == m_r * R_r(n)    for all n,

and the lhs tuple has no gaps iff none of the component tuples does.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .forms import TernaryTuple, rep_series
from .qseries import Series, add, extract_progression, product, scale, shift
from .theta import ThetaFactor, factor_to_component, theta_series


class MalformedRecord(ValueError):
    pass


@dataclass(frozen=True)
class RhsTerm:
    m: int
    shift: int
    factors: tuple[ThetaFactor, ...]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: tuple[ThetaFactor, ...]
    k: int
    rhs: tuple[RhsTerm, ...]
    source: str = ""

    def __post_init__(self):
        if not self.lhs:
            raise MalformedRecord(f"{self.id}: empty left-hand side")
        if self.k < 1:
            raise MalformedRecord(f"{self.id}: modulus must be positive")
        if not self.rhs:
            raise MalformedRecord(f"{self.id}: empty right-hand side")
        for term in self.rhs:
            if term.m < 1 or term.shift < 0 or not term.factors:
                raise MalformedRecord(f"{self.id}: bad term {term}")

    @property
    def is_dissection(self) -> bool:
        """Shifts are exactly 0..k-1 and every rhs exponent is divisible by k."""
        shifts = sorted(t.shift for t in self.rhs)
        if shifts != list(range(self.k)):
            return False
        return all(
            f.i % self.k == 0 and f.j % self.k == 0 for t in self.rhs for f in t.factors
        )

    @classmethod
    def from_json(cls, doc: dict) -> "IdentityRecord":
        try:
            return cls(
                id=str(doc["id"]),
                lhs=tuple(ThetaFactor(*f) for f in doc["lhs"]),
                k=int(doc["k"]),
                rhs=tuple(
                    RhsTerm(int(t["m"]), int(t["shift"]), tuple(ThetaFactor(*f) for f in t["factors"]))
                    for t in doc["rhs"]
                ),
                source=doc.get("source", ""),
            )
        except (KeyError, TypeError) as exc:
            raise MalformedRecord(f"cannot parse record {doc!r}: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "k": self.k,
            "lhs": [[f.i, f.j] for f in self.lhs],
            "rhs": [
                {"m": t.m, "shift": t.shift, "factors": [[f.i, f.j] for f in t.factors]}
                for t in self.rhs
            ],
            "source": self.source,
        }


def load_catalog(path: str | Path | None = None) -> list[IdentityRecord]:
    from .catalog import identities_path

    with open(path or identities_path(), encoding="utf-8") as fh:
        docs = json.load(fh)
    records = [IdentityRecord.from_json(d) for d in docs]
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        raise MalformedRecord("duplicate identity ids in catalog")
    return records


def find_record(records: Sequence[IdentityRecord], rid: str) -> IdentityRecord:
    for rec in records:
        if rec.id == rid:
            return rec
    raise KeyError(f"unknown identity {rid!r}")


def _factors_product(factors: Sequence[ThetaFactor], N: int) -> Series:
    return product([theta_series(f, N) for f in factors])


def lhs_series(rec: IdentityRecord, N: int) -> Series:
    return _factors_product(rec.lhs, N)


def rhs_series(rec: IdentityRecord, N: int) -> Series:
    total = Series.zero(N)
    for term in rec.rhs:
        if term.shift > N:
            continue
        piece = shift(_factors_product(term.factors, N), term.shift)
        total = add(total, scale(piece, term.m))
    return total


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    bound: int
    ok: bool
    # (n, lhs coefficient, rhs coefficient) at the first disagreement
    first_mismatch: tuple[int, int, int] | None = None


def verify_identity(rec: IdentityRecord, N: int) -> IdentityCheck:
    """Compare both sides coefficient by coefficient up to q^N."""
    lhs = lhs_series(rec, N).coeffs
    rhs = rhs_series(rec, N).coeffs
    diff = np.flatnonzero(lhs != rhs)
    if diff.size:
        n = int(diff[0])
        return IdentityCheck(rec.id, N, False, (n, int(lhs[n]), int(rhs[n])))
    return IdentityCheck(rec.id, N, True)


def verify_psi_product(alpha: int, beta: int, N: int) -> IdentityCheck:
    """``f(q^a, q^(a+2b)) f(q^b, q^(2a+b)) == f(q^a, q^b) psi(q^(a+b))`` up to q^N."""
    rec = IdentityRecord(
        id=f"psiprod_{alpha}_{beta}",
        lhs=(ThetaFactor(alpha, alpha + 2 * beta), ThetaFactor(beta, 2 * alpha + beta)),
        k=1,
        rhs=(
            RhsTerm(1, 0, (ThetaFactor(alpha, beta), ThetaFactor.named("psi", alpha + beta))),
        ),
    )
    return verify_identity(rec, N)


# --- dissection ----------------------------------------------------------------


@dataclass(frozen=True)
class DissectionComponent:
    shift: int
    multiplier: int
    tuple: TernaryTuple


@dataclass(frozen=True)
class Dissection:
    id: str
    k: int
    lhs: TernaryTuple
    components: tuple[DissectionComponent, ...]


def factors_to_tuple(factors: Sequence[ThetaFactor]) -> TernaryTuple:
    if len(factors) != 3:
        raise MalformedRecord(f"need three theta factors, got {len(factors)}")
    return TernaryTuple.from_components([factor_to_component(f) for f in factors])


def dissect_components(rec: IdentityRecord) -> Dissection:
    """Lhs tuple and one component tuple per rhs term (exponents divided by k).

    Tuples are reported in canonical order (components sorted decreasingly).
    """
    lhs = factors_to_tuple(rec.lhs).canonical()
    comps = []
    for term in sorted(rec.rhs, key=lambda t: t.shift):
        for f in term.factors:
            if f.i % rec.k or f.j % rec.k:
                raise MalformedRecord(f"{rec.id}: factor {f} not in q^{rec.k}")
        reduced = [ThetaFactor(f.i // rec.k, f.j // rec.k) for f in term.factors]
        comps.append(DissectionComponent(term.shift, term.m, factors_to_tuple(reduced).canonical()))
    return Dissection(rec.id, rec.k, lhs, tuple(comps))


@dataclass(frozen=True)
class CountCheck:
    id: str
    bound: int
    ok: bool
    # (shift, n, lhs count at k n + shift, m * component count)
    first_failure: tuple[int, int, int, int] | None = None


def check_dissection_counts(rec: IdentityRecord, N: int) -> CountCheck:
    """``R_lhs(k n + shift) == m * R_component(n)`` for every component and ``k n + shift <= N``."""
    d = dissect_components(rec)
    lhs = rep_series(d.lhs, N)
    for comp in d.components:
        if comp.shift > N:
            continue
        piece = extract_progression(lhs, d.k, comp.shift)
        expected = scale(rep_series(comp.tuple, piece.order), comp.multiplier)
        bad = np.flatnonzero(piece.coeffs != expected.coeffs)
        if bad.size:
            n = int(bad[0])
            return CountCheck(rec.id, N, False, (comp.shift, n, piece.coeff(n), expected.coeff(n)))
    return CountCheck(rec.id, N, True)


@dataclass(frozen=True)
class TransferReport:
    """Gap bookkeeping for one dissection.

    Component gaps cover ``0..bound``; the lhs is scanned on
    ``0..k*(bound+1)-1``, which is exactly the image of those ranges under
    ``n -> k n + shift``.  ``consistent`` says the lhs gaps are precisely the
    images of component gaps; then the lhs is gap-free iff every component is.
    """

    id: str
    k: int
    bound: int
    lhs: TernaryTuple
    lhs_gaps: list[int]
    component_gaps: dict[int, list[int]]
    unmatched: list[int] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.unmatched

    @property
    def lhs_universal(self) -> bool:
        return not self.lhs_gaps

    @property
    def components_universal(self) -> bool:
        return not any(self.component_gaps.values())

    @property
    def biconditional(self) -> bool:
        return self.consistent and self.lhs_universal == self.components_universal


def transfer(
    lhs: TernaryTuple, k: int, components: Sequence[DissectionComponent], N: int, rid: str = ""
) -> TransferReport:
    top = k * (N + 1) - 1
    lhs_gaps = rep_series(lhs, top).zeros()
    comp_gaps: dict[int, list[int]] = {}
    image = set()
    for comp in components:
        gaps = rep_series(comp.tuple, N).zeros()
        comp_gaps[comp.shift] = gaps
        image.update(k * n + comp.shift for n in gaps)
    unmatched = sorted(set(lhs_gaps) ^ image)
    return TransferReport(rid, k, N, lhs, lhs_gaps, comp_gaps, unmatched)


def universality_transfer(rec: IdentityRecord, N: int) -> TransferReport:
    d = dissect_components(rec)
    return transfer(d.lhs, d.k, d.components, N, rec.id)
