"""Balance profile of every offset set with largest offset at most J.

    python3 scripts/balance_table.py --max-j 6 --csv profiles.csv
"""

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from rsquad.balance import profile
from rsquad.rsq import RsQuadratic


@dataclass
class TableConfig:
    max_j: int = 6


def profiles(cfg: TableConfig):
    for k in range(1, cfg.max_j + 1):
        for offs in combinations(range(1, cfg.max_j + 1), k):
            yield profile(RsQuadratic(offs))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-j", type=int, default=6)
    ap.add_argument("--csv", help="write rows here ('-' for stdout)")
    args = ap.parse_args()
    rows = list(profiles(TableConfig(args.max_j)))
    if args.csv:
        fh = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="")
        w = csv.writer(fh)
        w.writerow(["offsets", "shape", "k", "dQ", "nuQ", "description"])
        for p in rows:
            w.writerow([" ".join(map(str, p.offsets)), p.shape.value, p.k, p.dQ, p.nuQ, p.describe()])
        if fh is not sys.stdout:
            fh.close()
    tally = Counter((p.shape.value, p.k) for p in rows)
    for (shape, k), count in sorted(tally.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
        print(f"{shape:18s} k={k!s:4s} {count:5d}", file=sys.stderr if args.csv == "-" else sys.stdout)


if __name__ == "__main__":
    main()
