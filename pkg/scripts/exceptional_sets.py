"""Empirical exceptional sets of the almost-universal sums at growing bounds.

Prints, for each sum, the gaps found up to each bound so the stabilisation
can be read off directly.
"""

from __future__ import annotations

import argparse
import json

from thetasums.claims import ALMOST_UNIVERSAL
from thetasums.forms import exceptional_set


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--bounds", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    p.add_argument("--json", action="store_true")
    args = p.parse_args()

    rows = []
    for label, t in ALMOST_UNIVERSAL:
        for N in args.bounds:
            e = exceptional_set(t, N)
            rows.append({"sum": label, "tuple": str(t), "bound": N, "gaps": e.gaps, "stabilized": e.stabilized})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        print(f"{r['tuple']:18s} {r['sum']:26s} N={r['bound']:<8d} gaps={r['gaps']} stabilized={r['stabilized']}")


if __name__ == "__main__":
    main()
