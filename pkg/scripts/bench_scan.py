"""Wall time of a full representation-count scan as the bound grows."""

from __future__ import annotations

import argparse
import time

from thetasums.forms import TernaryTuple, rep_series


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--tuple", type=int, nargs=6, default=[12, 8, 12, 6, 3, 1])
    p.add_argument("--bounds", type=int, nargs="+", default=[10**4, 10**5, 10**6, 4 * 10**6])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    t = TernaryTuple.of(args.tuple)
    for N in args.bounds:
        best = float("inf")
        for _ in range(args.repeat):
            start = time.perf_counter()
            s = rep_series(t, N)
            best = min(best, time.perf_counter() - start)
        print(f"{t} N={N:<9d} best={best:.3f}s gaps={len(s.zeros())}")


if __name__ == "__main__":
    main()
