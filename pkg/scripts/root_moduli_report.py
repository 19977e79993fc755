"""Fit weight recursions for a few functions and report the root moduli.

    python3 scripts/root_moduli_report.py
    python3 scripts/root_moduli_report.py --q 1,2 --q 2,5 --n-min 12 --n-max 60
"""

import argparse
from dataclasses import dataclass, field

from rsquad.errors import NoRecurrenceError
from rsquad.quadform import closed_form_report
from rsquad.recursion import fit_recurrence, format_poly, root_moduli
from rsquad.rsq import RsQuadratic, Semantics

DEFAULT = {"3,4": (9, 39), "1,2,3": (7, 27)}


@dataclass
class RootsConfig:
    functions: dict = field(default_factory=lambda: dict(DEFAULT))
    semantics: Semantics = Semantics.ORBIT
    tol: float = 1e-9


def report(cfg: RootsConfig):
    for literal, (lo, hi) in cfg.functions.items():
        q = RsQuadratic.parse(literal)
        seq = [closed_form_report(q, n, cfg.semantics).weight for n in range(lo, hi + 1)]
        try:
            spec = fit_recurrence(seq, lo)
        except NoRecurrenceError as exc:
            print(f"q={{{literal}}} n={lo}..{hi}: {exc}; widen the range")
            continue
        roots = root_moduli(spec.charpoly)
        near2 = sum(r.dev_2 <= cfg.tol for r in roots)
        near_sqrt2 = sum(r.dev_sqrt2 <= cfg.tol for r in roots)
        other = [r.modulus for r in roots if min(r.dev_2, r.dev_sqrt2) > cfg.tol]
        print(f"q={{{literal}}} n={lo}..{hi}: order {spec.order}, {format_poly(spec.charpoly)}")
        print(f"  |root| = 2: {near2}   |root| = sqrt2: {near_sqrt2}   other: {other or 'none'}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", action="append", help="offset literal, repeatable")
    ap.add_argument("--n-min", type=int, default=12)
    ap.add_argument("--n-max", type=int, default=60)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()
    funcs = {q: (args.n_min, args.n_max) for q in args.q} if args.q else dict(DEFAULT)
    report(RootsConfig(functions=funcs, tol=args.tol))


if __name__ == "__main__":
    main()
