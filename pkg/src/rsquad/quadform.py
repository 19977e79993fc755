"""Exact analysis of a quadratic RS function at fixed n, without truth tables.

Everything is derived from the bilinear form matrix ``C`` (circulant for
RS functions) and the quadratic form itself:

* ``v`` is ``dim ker C``, equivalently ``deg gcd(x^n + 1, A(x))``;
* the function is balanced iff it is not identically zero on ``ker C``
  (it is additive there);
* Dickson reduction gives the rank ``d`` and the sign of the weight
  offset, hence weight and nonlinearity.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass

from . import bitmat
from .errors import FalsificationError
from .gf2poly import Gf2Poly, dividing_period, gcd
from .rsq import QuadraticAnf, RsQuadratic, Semantics, a_polynomial, anf, nu2

__all__ = [
    "AnalysisReport",
    "DicksonForm",
    "FormMatrices",
    "KernelInfo",
    "VPeriod",
    "closed_form_report",
    "dickson_reduce",
    "dickson_reduce_anf",
    "form_matrices",
    "is_balanced",
    "kernel_and_parity",
    "mrs_report",
    "report_from_dickson",
    "v_period",
    "v_value",
]

BALANCED = "balanced"


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


@dataclass(frozen=True)
class FormMatrices:
    """``C`` (symmetric, zero diagonal) and ``B`` (strict upper part) as bit rows."""

    n: int
    C: tuple[int, ...]
    B: tuple[int, ...]
    linear: int

    def first_row_poly(self) -> Gf2Poly:
        return Gf2Poly(self.C[0]) if self.n else Gf2Poly(0)


def form_matrices(q: RsQuadratic, n: int, semantics=Semantics.ORBIT) -> FormMatrices:
    f = anf(q, n, semantics)
    B = tuple(row & ~((2 << j) - 1) for j, row in enumerate(f.adj))
    return FormMatrices(n, f.adj, B, f.linear)


def v_value(q: RsQuadratic, n: int) -> int:
    """Plateau parameter of the trace form: ``deg gcd(x^n + 1, A)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return gcd(Gf2Poly((1 << n) | 1), a_polynomial(q)).degree


@dataclass(frozen=True)
class VPeriod:
    period: int
    start: int
    values: tuple[int, ...]

    def at(self, n: int) -> int:
        return self.values[(n - self.start) % self.period]


def v_period(q: RsQuadratic) -> VPeriod:
    """One full period of ``v(n)``, listed from ``n = 2J + 1``.

    Checks that ``2J`` occurs exactly once per period and that the
    sequence is symmetric about multiples of the period.
    """
    K = dividing_period(a_polynomial(q))
    start = 2 * q.J + 1
    values = tuple(v_value(q, n) for n in range(start, start + K))
    top = 2 * q.J
    if values.count(top) != 1 or max(values) != top:
        raise FalsificationError(f"v = {top} should occur exactly once per period", q=q)
    seq = {n: v_value(q, n) for n in range(1, 2 * K)}
    for r in range(1, K):
        if seq[K - r] != seq[K + r]:
            raise FalsificationError(f"v({K}-{r}) != v({K}+{r})", q=q, n=K)
    for n in range(1, K):
        if seq[n] != seq[n + K]:
            raise FalsificationError(f"{K} is not a period of v", q=q, n=n)
    return VPeriod(K, start, values)


@dataclass(frozen=True)
class KernelInfo:
    n: int
    basis: tuple[int, ...]
    dim_v0: int
    v1_nonempty: bool

    @property
    def dim_kernel(self) -> int:
        return len(self.basis)


def _kernel_info(f: QuadraticAnf) -> KernelInfo:
    basis = bitmat.null_space(list(f.adj), f.n)
    # the form is additive on ker C, so checking a basis is enough
    reversing = any(f.evaluate(v) for v in basis)
    return KernelInfo(f.n, tuple(basis), len(basis) - int(reversing), reversing)


def kernel_and_parity(q: RsQuadratic, n: int, semantics=Semantics.ORBIT) -> KernelInfo:
    return _kernel_info(anf(q, n, semantics))


def is_balanced(q: RsQuadratic, n: int, semantics=Semantics.ORBIT) -> bool:
    info = kernel_and_parity(q, n, semantics)
    if info.v1_nonempty != ((info.dim_v0 - n) % 2 == 1):
        raise FalsificationError("parity-space dimension disagrees with balancedness", q=q, n=n)
    return info.v1_nonempty


@dataclass(frozen=True)
class DicksonForm:
    """``x1 x2 + ... + x_(2d-1) x_2d`` plus either a free linear variable or constant ``b``."""

    n: int
    d: int
    b: int | str  # 0, 1 or "balanced"

    @property
    def balanced(self) -> bool:
        return self.b == BALANCED

    def weight(self) -> int:
        half = 1 << (self.n - 1)
        if self.balanced:
            return half
        gap = 1 << (self.n - self.d - 1)
        return half - gap if self.b == 0 else half + gap

    def nonlinearity(self) -> int:
        return (1 << (self.n - 1)) - (1 << (self.n - self.d - 1))


def dickson_reduce_anf(f: QuadraticAnf) -> DicksonForm:
    """Reduce an explicit quadratic to Dickson form by affine substitutions.

    Picks a monomial ``x_a x_b`` and rewrites
    ``x_a x_b + x_a L1 + x_b L2 + R = (x_a + L2)(x_b + L1) + L1 L2 + R``,
    so the pair splits off and ``L1 L2 + R`` lives on the other variables.
    """
    adj = list(f.adj)
    lin = f.linear
    const = 0
    d = 0
    while True:
        a = next((j for j, row in enumerate(adj) if row), None)
        if a is None:
            break
        b = (adj[a] & -adj[a]).bit_length() - 1
        m1, c1 = adj[a] & ~(1 << b), lin >> a & 1
        m2, c2 = adj[b] & ~(1 << a), lin >> b & 1
        for v in (a, b):
            for j in _bits(adj[v]):
                adj[j] &= ~(1 << v)
            adj[v] = 0
        lin &= ~((1 << a) | (1 << b))
        # + (m1 + c1)(m2 + c2)
        for i in _bits(m1):
            row = m2 & ~(1 << i)
            adj[i] ^= row
            for j in _bits(row):
                adj[j] ^= 1 << i
        lin ^= m1 & m2
        if c1:
            lin ^= m2
        if c2:
            lin ^= m1
        const ^= c1 & c2
        d += 1
    return DicksonForm(f.n, d, BALANCED if lin else const)


def dickson_reduce(q: RsQuadratic, n: int, semantics=Semantics.ORBIT) -> DicksonForm:
    return dickson_reduce_anf(anf(q, n, semantics))


@dataclass(frozen=True)
class AnalysisReport:
    offsets: tuple[int, ...]
    n: int
    semantics: str
    v: int
    d: int
    balanced: bool
    dickson_b: int | str
    weight: int
    nonlinearity: int
    method: str

    @property
    def signature(self) -> tuple[int, int]:
        return (self.weight, self.nonlinearity)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["offsets"] = list(self.offsets)
        out["signature"] = list(self.signature)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        data = dict(data)
        data.pop("signature", None)
        data["offsets"] = tuple(data["offsets"])
        return cls(**data)

    CSV_FIELDS = ("offsets", "n", "semantics", "v", "d", "balanced", "dickson_b", "weight", "nonlinearity", "method")

    def csv_row(self) -> list:
        row = self.to_dict()
        row["offsets"] = " ".join(map(str, self.offsets))
        return [row[k] for k in self.CSV_FIELDS]

    @classmethod
    def to_csv(cls, reports) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cls.CSV_FIELDS)
        for r in reports:
            w.writerow(r.csv_row())
        return buf.getvalue()


def report_from_dickson(q: RsQuadratic, n: int, semantics, form: DicksonForm, method: str) -> AnalysisReport:
    return AnalysisReport(
        offsets=q.offsets,
        n=n,
        semantics=Semantics(semantics).value,
        v=n - 2 * form.d,
        d=form.d,
        balanced=form.balanced,
        dickson_b=form.b,
        weight=form.weight(),
        nonlinearity=form.nonlinearity(),
        method=method,
    )


def mrs_report(t: int, n: int, semantics=Semantics.ANF) -> AnalysisReport:
    """Closed form for ``(0,t)_n`` with ``n >= 2t + 1``, from ``gcd(n, t)`` alone."""
    if n < 2 * t + 1:
        raise ValueError(f"closed form needs n >= 2t+1 (t={t}, n={n})")
    q = RsQuadratic((t,))
    k = math.gcd(n, t)
    half = 1 << (n - 1)
    if (n // k) % 2 == 0:
        weight = nonlin = half - (1 << (n // 2 + k - 1))
        balanced, v = False, 2 * k
    else:
        weight, nonlin = half, half - (1 << ((n + k - 2) // 2))
        balanced, v = True, k
    if balanced != (n % (1 << (nu2(t) + 1)) != 0):
        raise FalsificationError("balancedness disagrees with the 2-adic criterion", q=q, n=n)
    if v != math.gcd(n, 2 * t) or v != v_value(q, n):
        raise FalsificationError(f"v={v} disagrees with gcd(n,2t)={math.gcd(n, 2 * t)}", q=q, n=n)
    d = (n - v) // 2
    return AnalysisReport(
        offsets=q.offsets,
        n=n,
        semantics=Semantics(semantics).value,
        v=v,
        d=d,
        balanced=balanced,
        dickson_b=BALANCED if balanced else 0,
        weight=weight,
        nonlinearity=nonlin,
        method="mrs-closed-form",
    )


def closed_form_report(q: RsQuadratic, n: int, semantics=Semantics.ANF) -> AnalysisReport:
    """Weight, nonlinearity, ranks and balancedness of ``q`` on ``n`` variables.

    Single-offset functions with ``n >= 2t + 1`` use the gcd closed form;
    everything else goes through Dickson reduction.
    """
    semantics = Semantics(semantics)
    if len(q) == 1 and n >= 2 * q.J + 1:
        return mrs_report(q.J, n, semantics)
    form = dickson_reduce(q, n, semantics)
    report = report_from_dickson(q, n, semantics, form, "dickson")
    if semantics is Semantics.ORBIT and report.v != v_value(q, n):
        raise FalsificationError(f"rank gives v={report.v}, gcd gives {v_value(q, n)}", q=q, n=n)
    return report
