"""Affine equivalence of quadratic RS functions.

Two quadratics are affine equivalent exactly when they share weight and
nonlinearity, so classes are buckets keyed by that pair.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations

from sympy import divisor_count

from .errors import FalsificationError
from .quadform import closed_form_report
from .rsq import RsQuadratic, Semantics

__all__ = [
    "ClassTable",
    "MinRepReport",
    "Signature",
    "are_equivalent",
    "classify",
    "classify_all_rs",
    "classify_mrs",
    "enumerate_rs",
    "min_representative_terms",
    "signature",
]

MAX_SLOTS = 24
MAX_N = 40

Signature = tuple[int, int]


def signature(q: RsQuadratic | None, n: int, semantics=Semantics.ANF) -> Signature:
    """``(weight, nonlinearity)``; ``None`` stands for the zero function."""
    if q is None:
        return (0, 0)
    r = closed_form_report(q, n, semantics)
    return (r.weight, r.nonlinearity)


def are_equivalent(q1: RsQuadratic, q2: RsQuadratic, n: int, semantics=Semantics.ANF) -> bool:
    return signature(q1, n, semantics) == signature(q2, n, semantics)


@dataclass(frozen=True)
class ClassTable:
    n: int
    semantics: str
    classes: dict[Signature, list[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def counts(self) -> dict[Signature, int]:
        return {sig: len(members) for sig, members in self.classes.items()}

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def num_functions(self) -> int:
        return sum(self.counts.values())

    def class_of(self, offsets) -> Signature:
        offsets = tuple(offsets)
        for sig, members in self.classes.items():
            if offsets in members:
                return sig
        raise KeyError(offsets)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "semantics": self.semantics,
            "num_classes": self.num_classes,
            "classes": [
                {"weight": w, "nonlinearity": nl, "count": len(m), "members": [list(o) for o in m]}
                for (w, nl), m in self.classes.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ClassTable:
        classes = {
            (c["weight"], c["nonlinearity"]): [tuple(o) for o in c["members"]] for c in data["classes"]
        }
        return cls(data["n"], data["semantics"], classes)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["offsets", "weight", "nonlinearity", "class_id"])
        for cid, ((wt, nl), members) in enumerate(self.classes.items()):
            for offs in members:
                w.writerow([" ".join(map(str, offs)), wt, nl, cid])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"n={self.n} semantics={self.semantics} classes={self.num_classes}"]
        for cid, ((wt, nl), members) in enumerate(self.classes.items()):
            shown = " ".join("{" + ",".join(map(str, o)) + "}" for o in members[:6])
            more = f" (+{len(members) - 6})" if len(members) > 6 else ""
            lines.append(f"  [{cid}] weight={wt} N={nl} size={len(members)}: {shown}{more}")
        return "\n".join(lines)


def classify(functions, n: int, semantics=Semantics.ANF) -> ClassTable:
    """Bucket the given offset tuples by signature, ordered by signature."""
    semantics = Semantics(semantics)
    buckets: dict[Signature, list[tuple[int, ...]]] = {}
    for offs in functions:
        buckets.setdefault(signature(RsQuadratic(tuple(offs)), n, semantics), []).append(tuple(offs))
    return ClassTable(n, semantics.value, dict(sorted(buckets.items())))


def classify_mrs(n: int) -> ClassTable:
    """Classes of ``(0,t)_n`` for ``1 <= t <= n/2``; there must be ``tau(n) - 1`` of them."""
    if n < 3:
        raise ValueError("n must be at least 3")
    table = classify(((t,) for t in range(1, n // 2 + 1)), n, Semantics.ANF)
    expected = int(divisor_count(n)) - 1
    if table.num_classes != expected:
        raise FalsificationError(f"{table.num_classes} MRS classes, expected {expected}", n=n)
    return table


def _slots(n: int, semantics: Semantics) -> range:
    top = n // 2 if semantics is Semantics.ANF else (n - 1) // 2
    return range(1, top + 1)


def enumerate_rs(n: int, semantics=Semantics.ANF, max_terms: int | None = None):
    """All nonzero coefficient vectors, as ascending offset tuples, by support size."""
    semantics = Semantics(semantics)
    slots = _slots(n, semantics)
    if len(slots) > MAX_SLOTS:
        raise ValueError(f"{len(slots)} coefficient slots exceeds the cap {MAX_SLOTS}")
    top = len(slots) if max_terms is None else min(max_terms, len(slots))
    for size in range(1, top + 1):
        yield from combinations(slots, size)


def classify_all_rs(n: int, max_terms: int | None = None, semantics=Semantics.ANF) -> ClassTable:
    """Class table of every quadratic RS function on ``n`` variables.

    ANF mode has one slot per offset ``1..n/2`` (so the short function is a
    slot of its own for even ``n``); ORBIT mode uses ``1..(n-1)/2``.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in [2, {MAX_N}]")
    return classify(enumerate_rs(n, semantics, max_terms), n, semantics)


@dataclass(frozen=True)
class MinRepReport:
    n: int
    semantics: str
    B_observed: int
    min_terms: dict[Signature, int]
    representatives: dict[Signature, tuple[int, ...]]

    @property
    def within_three(self) -> bool:
        return self.B_observed <= 3

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "semantics": self.semantics,
            "B_observed": self.B_observed,
            "within_three": self.within_three,
            "classes": [
                {
                    "weight": w,
                    "nonlinearity": nl,
                    "min_terms": self.min_terms[(w, nl)],
                    "representative": list(self.representatives[(w, nl)]),
                }
                for (w, nl) in self.min_terms
            ],
        }


def min_representative_terms(n: int, semantics=Semantics.ANF, table: ClassTable | None = None) -> MinRepReport:
    """Smallest support size in each class and the largest such minimum."""
    table = table or classify_all_rs(n, semantics=semantics)
    reps = {sig: min(members, key=lambda o: (len(o), o)) for sig, members in table.classes.items()}
    mins = {sig: len(r) for sig, r in reps.items()}
    return MinRepReport(n, table.semantics, max(mins.values()), mins, reps)
