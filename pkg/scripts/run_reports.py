"""Run every batch report and write one JSON document per report.

    python3 scripts/run_reports.py --out results --jobs 2
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from thetasums import cli

REPORTS = ("identities", "equivalences", "dickson", "liouville", "pentagonal", "theta-universal", "forms-universal", "almost-universal")


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--only", nargs="*", choices=REPORTS, default=list(REPORTS))
    args = p.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for name in args.only:
        path = args.out / f"{name}.json"
        code = cli.main(["report", name, "--format", "json", "--jobs", str(args.jobs), "--out", str(path)])
        doc = json.loads(path.read_text())
        npass = sum(r["pass"] for r in doc["rows"])
        print(f"{name:13s} {npass:5d}/{len(doc['rows']):<5d} rows pass -> {path}")
        status |= code
    return status


if __name__ == "__main__":
    sys.exit(main())
