"""Cross-checks of the fast paths against brute force.

Each check raises :class:`FalsificationError` naming ``(q, n)`` on the
first disagreement, so a clean return means every case agreed exactly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np

from .balance import profile
from .boolfun import table_from_anf, walsh
from .errors import FalsificationError
from .gf2field import field_new, trace_form_table
from .quadform import closed_form_report, is_balanced, v_value
from .rsq import RsQuadratic, Semantics

__all__ = [
    "VerifyConfig",
    "all_offset_sets",
    "oracle_check",
    "profile_check",
    "run_verify",
    "trace_check",
]


def all_offset_sets(max_j: int):
    """Every nonempty subset of ``1..max_j`` as an :class:`RsQuadratic`."""
    for size in range(1, max_j + 1):
        for offs in combinations(range(1, max_j + 1), size):
            yield RsQuadratic(offs)


def oracle_check(q: RsQuadratic, n: int, semantics=Semantics.ORBIT) -> None:
    """Closed form against the truth table and its Walsh spectrum."""
    semantics = Semantics(semantics)
    report = closed_form_report(q, n, semantics)
    spec = walsh(table_from_anf(q, n, semantics))
    w0 = int(spec.values[0])
    wt = ((1 << n) - w0) // 2
    nl = (1 << (n - 1)) - spec.max_abs() // 2
    got = (report.weight, report.nonlinearity, report.balanced)
    want = (wt, nl, w0 == 0)
    if got != want:
        raise FalsificationError(f"closed form {got} != truth table {want} ({semantics.value})", q=q, n=n)
    if semantics is Semantics.ORBIT:
        v = v_value(q, n)
        amp = 1 << ((n + v) // 2)
        vals = np.abs(spec.values)
        if (n + v) % 2 or not np.all((vals == 0) | (vals == amp)):
            raise FalsificationError(f"spectrum is not {v}-plateaued", q=q, n=n)


def trace_check(q: RsQuadratic, n: int) -> tuple[int, int]:
    """``|W(0)|`` of the RS function and of its trace form over GF(2^n); they must agree."""
    table = table_from_anf(q, n, Semantics.ORBIT)
    rs = abs((1 << n) - 2 * int(np.bitwise_count(table.packed).sum()))
    tf = trace_form_table(field_new(n), q)
    tr = abs((1 << n) - 2 * int(tf.sum()))
    if rs != tr:
        raise FalsificationError(f"|W_Q(0)|={rs} but trace form gives {tr}", q=q, n=n)
    if (tr == 0) != is_balanced(q, n, Semantics.ORBIT):
        raise FalsificationError("trace-form balance disagrees with the kernel criterion", q=q, n=n)
    return rs, tr


def profile_check(q: RsQuadratic, n_max: int) -> None:
    prof = profile(q)
    for n in range(1, n_max + 1):
        if prof.is_balanced_at(n) != is_balanced(q, n, Semantics.ORBIT):
            raise FalsificationError(f"profile {prof.describe()} is wrong", q=q, n=n)


@dataclass(frozen=True)
class VerifyConfig:
    max_j: int = 4
    n_min: int = 3
    n_max: int = 12
    trace_n_max: int = 10
    profile_max_j: int = 6
    profile_n_max: int = 32


def run_verify(cfg: VerifyConfig = VerifyConfig()) -> dict:
    counts = {"oracle": 0, "trace": 0, "profile": 0}
    for q in all_offset_sets(cfg.max_j):
        for n in range(cfg.n_min, cfg.n_max + 1):
            for sem in Semantics:
                if sem is Semantics.ANF and any(i % n == 0 for i in q.offsets):
                    continue
                oracle_check(q, n, sem)
                counts["oracle"] += 1
        for n in range(2, cfg.trace_n_max + 1):
            trace_check(q, n)
            counts["trace"] += 1
    for q in all_offset_sets(cfg.profile_max_j):
        profile_check(q, cfg.profile_n_max)
        counts["profile"] += 1
    return {"config": asdict(cfg), "checks": counts, "status": "ok"}
