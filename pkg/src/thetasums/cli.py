"""Command-line entry point: scans, identity checks and batch reports.

Every row carries its scan bound; the process exits 0 only if every row of
the requested command passes.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

import numpy as np

from . import claims
from .forms import (
    Component,
    TernaryTuple,
    components_series,
    first_difference,
)
from .identities import (
    check_dissection_counts,
    dissect_components,
    find_record,
    load_catalog,
    universality_transfer,
    verify_identity,
)
from .qseries import Series
from .ternary import load_rules, reduction_bridge, verify_dickson
from .theta import ThetaFactor, theta_series

SCAN_LIMIT = 10**6
IDENTITY_LIMIT = 10**4
BRIDGE_LIMIT = 2000

REPORT_LIMITS = {
    "theta-universal": SCAN_LIMIT,
    "forms-universal": SCAN_LIMIT,
    "almost-universal": SCAN_LIMIT,
    "liouville": 2 * 10**4,
    "pentagonal": SCAN_LIMIT,
    "dickson": 10**5,
    "equivalences": 10**4,
    "identities": IDENTITY_LIMIT,
}
# short names accepted on the command line
REPORT_ALIASES = {"thm1.2": "theta-universal", "sec2": "forms-universal", "thm1.4": "almost-universal"}

# proof of the last group treats this tuple in place of the listed (16,8,6,4,6,2)
PROOF_VARIANT = TernaryTuple.of(16, 8, 6, 4, 4, 2)


@dataclass(frozen=True)
class RunConfig:
    limit: int
    catalog: Path | None = None
    rules: Path | None = None
    fmt: str = "text"
    jobs: int = 1
    out: Path | None = None
    cache: Path | None = None

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be at least 1")
        for p in (self.catalog, self.rules):
            if p is not None and not Path(p).exists():
                raise FileNotFoundError(p)


@dataclass
class Row:
    claim: str
    subject_kind: str  # tuple | form | identity | equivalence
    subject: str
    bound: int
    verdict: str
    passed: bool
    gaps: list = field(default_factory=list)
    witness: Any = None
    source_quote: str = ""
    wall_time: float = 0.0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            self.subject_kind: self.subject,
            "bound": self.bound,
            "verdict": self.verdict,
            "pass": self.passed,
            "gaps": self.gaps,
            "witness": self.witness,
            "source_quote": self.source_quote,
            "wall_time": round(self.wall_time, 4),
        }


# --- series cache -------------------------------------------------------------


def _cache_key(comps: Sequence[Component], N: int) -> str:
    return "rep_" + "_".join(f"{a}.{b}" for a, b in comps) + f"_N{N}"


def _digest(arr: np.ndarray) -> str:
    return hashlib.sha256(np.ascontiguousarray(arr).tobytes()).hexdigest()


def cached_series(comps: Sequence[Component], N: int, cache: Path | None) -> Series:
    """Representation series, read from ``cache`` when a checksummed copy exists."""
    if cache is None:
        return components_series(comps, N)
    cache = Path(cache)
    key = _cache_key(comps, N)
    data, check = cache / f"{key}.npy", cache / f"{key}.sha256"
    if data.exists() and check.exists():
        arr = np.load(data)
        if arr.dtype == np.int64 and arr.shape == (N + 1,) and _digest(arr) == check.read_text().strip():
            return Series(arr)
    s = components_series(comps, N)
    cache.mkdir(parents=True, exist_ok=True)
    np.save(data, s.coeffs)
    check.write_text(_digest(s.coeffs) + "\n")
    return s


def _gaps(t: TernaryTuple, N: int, cache: Path | None) -> list[int]:
    return cached_series(t.components, N, cache).zeros()


# --- row builders (module level so worker processes can pickle them) -----------


def _timed(fn: Callable[..., Row]) -> Callable[..., Row]:
    def run(*args) -> Row:
        start = time.perf_counter()
        row = fn(*args)
        row.wall_time = time.perf_counter() - start
        return row

    run.__name__ = fn.__name__
    return run


def _universal_row(claim: str, t: TernaryTuple, N: int, cache, quote: str) -> Row:
    gaps = _gaps(t, N, cache)
    verdict = f"universal-up-to-{N}" if not gaps else "has-gaps"
    return Row(claim, "tuple", str(t), N, verdict, not gaps, gaps, gaps[0] if gaps else None, quote)


def _forms_row(claim: str, t: TernaryTuple, N: int, cache, quote: str) -> Row:
    gaps = _gaps(t, N, cache)
    bridge = reduction_bridge(t, min(N, BRIDGE_LIMIT))
    ok = not gaps and bridge.ok
    if gaps:
        verdict = "has-gaps"
    elif not bridge.ok:
        verdict = "bridge-failed"
    else:
        verdict = f"universal-up-to-{N}"
    witness = {
        "reduction": str(bridge.reduction),
        "bridge_bound": bridge.bound,
        "bridge_ok": bridge.ok,
        "bridge_witness": bridge.witness,
    }
    return Row(claim, "tuple", str(t), N, verdict, ok, gaps, witness, quote)


def _exceptional_row(claim: str, t: TernaryTuple, N: int, cache, quote: str) -> Row:
    gaps = _gaps(t, N, cache)
    stable = not gaps or 2 * gaps[-1] <= N
    verdict = "stabilized" if stable else "gap-in-upper-half"
    witness = {"count": len(gaps), "largest": gaps[-1] if gaps else None}
    return Row(claim, "tuple", str(t), N, verdict, stable, gaps, witness, quote)


def _liouville_row(abc: tuple[int, int, int], N: int, cache) -> Row:
    t = claims.triangular_tuple(*abc)
    gaps = _gaps(t, N, cache)
    listed = abc in claims.LIOUVILLE
    ok = listed == (not gaps)
    verdict = ("universal" if not gaps else "gap") + ("-listed" if listed else "-unlisted")
    quote = "listed universal triple" if listed else "not in the universal list"
    subject = "T:" + ",".join(map(str, abc))
    return Row("liouville", "tuple", subject, N, verdict, ok, gaps[:10], gaps[0] if gaps else None, quote)


def _dickson_row(rule, N: int) -> Row:
    chk = verify_dickson(rule.form, rule, N)
    witness = None
    if not chk.ok:
        witness = {"n": chk.witness, "empirically_excluded": chk.empirically_excluded}
    return Row(
        "dickson", "form", str(rule.form), N, "rule-matches" if chk.ok else "rule-mismatch",
        chk.ok, [], witness, rule.source,
    )


def _equiv_row(name: str, lhs, rhs, N: int, quote: str) -> Row:
    diff = first_difference(lhs, rhs, N)
    subject = f"{format_components(lhs)} ~ {format_components(rhs)}"
    verdict = "equivalent" if diff is None else "differ"
    return Row(name, "equivalence", subject, N, verdict, diff is None, [], diff, quote)


def _identity_row(rec, N: int) -> Row:
    chk = verify_identity(rec, N)
    witness = None if chk.ok else dict(zip(("n", "lhs", "rhs"), chk.first_mismatch))
    return Row("identity", "identity", rec.id, N, "ok" if chk.ok else "mismatch", chk.ok, [], witness, rec.source)


def _dissect_row(rec, N: int) -> Row:
    d = dissect_components(rec)
    count = check_dissection_counts(rec, N) if N else None
    comps = [{"shift": c.shift, "m": c.multiplier, "tuple": str(c.tuple)} for c in d.components]
    witness = {"k": d.k, "lhs": str(d.lhs), "components": comps}
    ok = count is None or count.ok
    if count is not None and not count.ok:
        witness["count_failure"] = dict(zip(("shift", "n", "lhs", "rhs"), count.first_failure))
    return Row("dissection", "identity", rec.id, N, "count-law-holds" if ok else "count-law-fails", ok, [], witness, rec.source)


def _transfer_row(rec, N: int) -> Row:
    rep = universality_transfer(rec, N)
    witness = {
        "k": rep.k,
        "lhs": str(rep.lhs),
        "lhs_scan_top": rep.k * (N + 1) - 1,
        "component_gaps": {str(s): g for s, g in sorted(rep.component_gaps.items())},
        "unmatched": rep.unmatched,
        "lhs_universal": rep.lhs_universal,
        "components_universal": rep.components_universal,
    }
    verdict = "gap-sets-correspond" if rep.consistent else "gap-sets-differ"
    return Row("transfer", "identity", rec.id, N, verdict, rep.biconditional, rep.lhs_gaps, witness, rec.source)


# --- execution ----------------------------------------------------------------


def _call(task):
    fn, args = task
    return _timed(fn)(*args)


def run_tasks(tasks: list[tuple[Callable, tuple]], jobs: int) -> list[Row]:
    """Run row builders, in a process pool when ``jobs > 1``; output keeps task order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_call(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_call, tasks))


def report_tasks(name: str, cfg: RunConfig) -> list[tuple[Callable, tuple]]:
    N, cache = cfg.limit, cfg.cache
    if name == "theta-universal":
        quote = "listed universal (theta-product dissections)"
        return [(_universal_row, ("theta-universal", t, N, cache, quote)) for t in claims.THETA_UNIVERSAL]
    if name == "forms-universal":
        tasks = []
        for group, tuples in claims.FORMS_UNIVERSAL.items():
            quote = f"listed universal ({group} group, via diagonal ternary forms)"
            tasks += [(_forms_row, (f"forms-universal-{group}", t, N, cache, quote)) for t in tuples]
        quote = "tuple handled in the proof of the fourth group"
        tasks.append((_forms_row, ("forms-universal-fourth-proof", PROOF_VARIANT, N, cache, quote)))
        return tasks
    if name == "almost-universal":
        return [
            (_exceptional_row, ("almost-universal", t, N, cache, f"{label} stated almost universal"))
            for label, t in claims.ALMOST_UNIVERSAL
        ]
    if name == "liouville":
        triples = [(a, b, c) for a in range(1, 21) for b in range(a, 21) for c in range(b, 21)]
        return [(_liouville_row, (abc, N, cache)) for abc in triples]
    if name == "pentagonal":
        return [
            (_universal_row, ("pentagonal", claims.pentagonal_tuple(b, c), N, cache, f"listed pair (b,c)=({b},{c})"))
            for b, c in claims.PENTAGONAL_PAIRS
        ]
    if name == "dickson":
        return [(_dickson_row, (rule, N)) for rule in load_rules(cfg.rules)]
    if name == "equivalences":
        return [(_equiv_row, (e.name, e.lhs, e.rhs, N, e.statement)) for e in claims.EQUIVALENCES]
    if name == "identities":
        return [(_identity_row, (rec, N)) for rec in load_catalog(cfg.catalog)]
    raise KeyError(name)


# --- output -------------------------------------------------------------------

CSV_FIELDS = ("claim", "subject_kind", "subject", "bound", "verdict", "pass", "gaps", "witness", "source_quote", "wall_time")


def render(rows: list[Row], fmt: str, title: str) -> str:
    if fmt == "json":
        doc = {"report": title, "passed": all(r.passed for r in rows), "rows": [r.to_json() for r in rows]}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in rows:
            w.writerow([
                r.claim, r.subject_kind, r.subject, r.bound, r.verdict, int(r.passed),
                json.dumps(r.gaps), json.dumps(r.witness), r.source_quote, f"{r.wall_time:.4f}",
            ])
        return buf.getvalue()
    lines = [f"# {title}"]
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        gaps = _short(r.gaps)
        extra = f" gaps={gaps}" if r.gaps else ""
        wit = f" witness={json.dumps(r.witness)}" if r.witness is not None and not r.passed else ""
        lines.append(f"{status} {r.claim} {r.subject} N={r.bound} {r.verdict}{extra}{wit}")
        if r.claim == "dissection":
            lines.append(f"  k={r.witness['k']} lhs {r.witness['lhs']}")
            lines += [f"  shift {c['shift']} m={c['m']} {c['tuple']}" for c in r.witness["components"]]
    npass = sum(r.passed for r in rows)
    lines.append(f"# {npass}/{len(rows)} rows pass")
    return "\n".join(lines) + "\n"


def _short(gaps: list, k: int = 12) -> str:
    if len(gaps) <= k:
        return json.dumps(gaps)
    return json.dumps(gaps[:k])[:-1] + f", ... ({len(gaps)} total)]"


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.out is not None:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --- argument parsing ---------------------------------------------------------


def format_components(comps: Sequence[Component]) -> str:
    return "+".join(f"{a},{b}" for a, b in comps)


def parse_components(spec: str) -> tuple[Component, ...]:
    """``"4,2+5,1"`` -> ``((4, 2), (5, 1))``."""
    comps = []
    for part in spec.split("+"):
        try:
            a, b = (int(v) for v in part.split(","))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad component {part!r} in {spec!r}") from exc
        if a <= 0 or (a - b) % 2:
            raise argparse.ArgumentTypeError(f"component ({a},{b}) needs a > 0 and a - b even")
        comps.append((a, b))
    return tuple(comps)


def _tuple_arg(parser: argparse.ArgumentParser, values: list[int]) -> TernaryTuple:
    try:
        return TernaryTuple.of(values)
    except ValueError as exc:
        parser.error(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=None, help="scan bound N")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="fmt")
    common.add_argument("--catalog", type=Path, default=None, help="identity catalog JSON")
    common.add_argument("--rules", type=Path, default=None, help="excluded-set rules JSON")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for report rows")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    common.add_argument("--cache", type=Path, default=None, help="directory for cached series")

    p = argparse.ArgumentParser(prog="thetasums", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("theta", parents=[common], help="coefficients of f(q^i, q^j)")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)

    for name in ("universal", "exceptional"):
        s = sub.add_parser(name, parents=[common], help=f"{name} scan of a tuple a1 a2 b1 b2 c1 c2")
        s.add_argument("tuple", type=int, nargs=6)

    s = sub.add_parser("identity", parents=[common], help="catalog identities")
    s.add_argument("action", choices=("verify", "dissect", "transfer"))
    s.add_argument("id", nargs="?")
    s.add_argument("--all", action="store_true")

    s = sub.add_parser("report", parents=[common], help="batch reproduction of a claim list")
    s.add_argument("name", choices=sorted(REPORT_LIMITS) + sorted(REPORT_ALIASES))

    s = sub.add_parser("equiv", parents=[common], help="compare value sets of two component sums")
    s.add_argument("lhs", type=parse_components)
    s.add_argument("rhs", type=parse_components)
    return p


def _config(args, default_limit: int) -> RunConfig:
    return RunConfig(
        limit=args.limit if args.limit is not None else default_limit,
        catalog=args.catalog,
        rules=args.rules,
        fmt=args.fmt,
        jobs=args.jobs,
        out=args.out,
        cache=args.cache,
    )


def _cmd_theta(args, cfg: RunConfig) -> int:
    try:
        coeffs = theta_series(ThetaFactor(args.i, args.j), cfg.limit).tolist()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        text = json.dumps(coeffs) + "\n"
    elif cfg.fmt == "csv":
        text = "n,coeff\n" + "".join(f"{n},{c}\n" for n, c in enumerate(coeffs))
    else:
        text = ",".join(map(str, coeffs)) + "\n"
    emit(text, cfg)
    return 0


def _cmd_identity(args, parser, cfg: RunConfig) -> int:
    records = load_catalog(cfg.catalog)
    if args.all == bool(args.id):
        parser.error("give exactly one of an identity id or --all")
    if args.id:
        try:
            records = [find_record(records, args.id)]
        except KeyError as exc:
            parser.error(str(exc.args[0]))
    builder = {"verify": _identity_row, "dissect": _dissect_row, "transfer": _transfer_row}[args.action]
    if args.action != "verify":
        records = [r for r in records if len(r.lhs) == 3 and r.is_dissection]
        if not records:
            parser.error(f"{args.id} is not a three-factor dissection")
    rows = run_tasks([(builder, (rec, cfg.limit)) for rec in records], cfg.jobs)
    emit(render(rows, cfg.fmt, f"identity {args.action}"), cfg)
    return 0 if all(r.passed for r in rows) else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "theta":
            return _cmd_theta(args, _config(args, 10))
        if args.command in ("universal", "exceptional"):
            t = _tuple_arg(parser, args.tuple)
            cfg = _config(args, SCAN_LIMIT)
            fn = _universal_row if args.command == "universal" else _exceptional_row
            rows = run_tasks([(fn, (args.command, t, cfg.limit, cfg.cache, "command-line tuple"))], 1)
            emit(render(rows, cfg.fmt, f"{args.command} {t}"), cfg)
            return 0 if rows[0].passed else 1
        if args.command == "identity":
            default = 5000 if args.action == "transfer" else IDENTITY_LIMIT
            return _cmd_identity(args, parser, _config(args, default))
        if args.command == "report":
            name = REPORT_ALIASES.get(args.name, args.name)
            cfg = _config(args, REPORT_LIMITS[name])
            rows = run_tasks(report_tasks(name, cfg), cfg.jobs)
            emit(render(rows, cfg.fmt, f"report {name}"), cfg)
            return 0 if all(r.passed for r in rows) else 1
        if args.command == "equiv":
            cfg = _config(args, IDENTITY_LIMIT)
            rows = [_timed(_equiv_row)("equiv", args.lhs, args.rhs, cfg.limit, "command-line pair")]
            emit(render(rows, cfg.fmt, "equiv"), cfg)
            return 0 if rows[0].passed else 1
    except (ValueError, FileNotFoundError) as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
