"""Smallest support needed per affine class, for every n in a range.

    python3 scripts/question_b_sweep.py --n-max 20 --semantics anf
"""

import argparse
import json
from dataclasses import asdict, dataclass

from rsquad.equiv import min_representative_terms
from rsquad.rsq import Semantics


@dataclass
class SweepConfig:
    n_min: int = 3
    n_max: int = 20
    semantics: str = "anf"
    bound: int = 3


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        rep = min_representative_terms(n, Semantics(cfg.semantics))
        worst = [list(r) for s, r in rep.representatives.items() if rep.min_terms[s] == rep.B_observed]
        rows.append({"n": n, "classes": len(rep.min_terms), "B_observed": rep.B_observed,
                     "exceeds_bound": rep.B_observed > cfg.bound, "hardest": worst})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--semantics", choices=["anf", "orbit"], default="anf")
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = vars(ap.parse_args())
    as_json = args.pop("json")
    cfg = SweepConfig(**args)
    rows = sweep(cfg)
    if as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        flag = "  EXCEEDS" if r["exceeds_bound"] else ""
        print(f"n={r['n']:3d} classes={r['classes']:3d} B={r['B_observed']}{flag}  e.g. {r['hardest'][0]}")


if __name__ == "__main__":
    main()
