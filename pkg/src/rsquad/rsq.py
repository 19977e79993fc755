"""Quadratic rotation symmetric functions as sets of monomial offsets.

An :class:`RsQuadratic` with offsets ``{i1, i2, ...}`` stands for the trace
form ``x -> sum_i Tr(x^(2^i + 1))`` and, at a fixed ``n``, for a sum of
quadratic orbits ``sum_j x_j x_(j+i)``.  Two conventions exist for turning
offsets into an algebraic normal form at a given ``n``; see
:class:`Semantics` and :func:`anf`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .gf2poly import Gf2Poly

__all__ = [
    "QuadraticAnf",
    "ResidueMultiset",
    "RsQuadratic",
    "Semantics",
    "a_polynomial",
    "anf",
    "is_equitable",
    "is_semi_equitable",
    "nu2",
    "partition_by_valuation",
    "reduce_mod",
    "vanishes_identically",
]


def nu2(m: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if m == 0:
        raise ValueError("nu2(0) is infinite")
    m = abs(m)
    return (m & -m).bit_length() - 1


class Semantics(str, enum.Enum):
    """How offsets become monomials at a fixed number of variables.

    ANF: offset ``t`` gives the function ``(0, t)_n``: ``n`` monomials
    ``x_j x_(j+t)``, or only ``n/2`` of them when ``t = n/2`` (the short
    function).  ORBIT: every offset contributes the full ``n``-term cyclic
    sum, so short orbits cancel, ``i`` and ``n - i`` coincide, and offsets
    divisible by ``n`` give the linear function ``x_0 + ... + x_(n-1)``.
    ORBIT matches the trace form.
    """

    ANF = "anf"
    ORBIT = "orbit"


@dataclass(frozen=True)
class RsQuadratic:
    offsets: tuple[int, ...]

    def __post_init__(self):
        offs = tuple(int(i) for i in self.offsets)
        if not offs:
            raise ValueError("an RS quadratic needs at least one offset")
        if any(i < 1 for i in offs):
            raise ValueError(f"offsets must be positive: {offs}")
        if any(a >= b for a, b in zip(offs, offs[1:])):
            raise ValueError(f"offsets must be strictly ascending: {offs}")
        object.__setattr__(self, "offsets", offs)

    @classmethod
    def of(cls, *offsets: int) -> RsQuadratic:
        return cls(tuple(sorted(offsets)))

    @classmethod
    def parse(cls, literal: str) -> RsQuadratic:
        """Parse a literal like ``"3,4"``; offsets must already be ascending."""
        try:
            offs = tuple(int(tok) for tok in literal.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"bad function literal {literal!r}") from None
        return cls(offs)

    @property
    def J(self) -> int:
        return self.offsets[-1]

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def __str__(self) -> str:
        return ",".join(map(str, self.offsets))


@dataclass(frozen=True)
class ResidueMultiset:
    n: int
    counts: dict[int, int]

    def __post_init__(self):
        if any(not 0 <= r < self.n for r in self.counts):
            raise ValueError("residues must lie in [0, n)")

    def size(self) -> int:
        return sum(self.counts.values())

    def mult(self, r: int) -> int:
        return self.counts.get(r % self.n, 0)


def a_polynomial(q: RsQuadratic) -> Gf2Poly:
    """Numerator of the Laurent polynomial ``sum_i (x^i + x^-i)``.

    Multiplies through by ``x^J`` and strips any remaining power of ``x``;
    the result is palindromic with constant term 1.
    """
    m = q.J
    bits = 0
    for i in q.offsets:
        bits ^= (1 << (m + i)) ^ (1 << (m - i))
    p = Gf2Poly(bits)
    while p and not p.bits & 1:
        p = Gf2Poly(p.bits >> 1)
    return p


def reduce_mod(q: RsQuadratic, n: int) -> ResidueMultiset:
    if n < 1:
        raise ValueError("n must be positive")
    return ResidueMultiset(n, dict(sorted(Counter(i % n for i in q.offsets).items())))


def _pairs_off(m: ResidueMultiset) -> bool:
    n = m.n
    if m.mult(0) % 2:
        return False
    for r in range(1, (n + 1) // 2):
        if (m.mult(r) + m.mult(n - r)) % 2:
            return False
    return True


def is_equitable(m: ResidueMultiset) -> bool:
    """Residues split into pairs ``{i, i'}`` with ``i + i'`` or ``i - i'`` zero mod n."""
    if not _pairs_off(m):
        return False
    return m.n % 2 == 1 or m.mult(m.n // 2) % 2 == 0


def is_semi_equitable(m: ResidueMultiset) -> bool:
    """Equitable plus an odd number of copies of ``n/2``."""
    return m.n % 2 == 0 and _pairs_off(m) and m.mult(m.n // 2) % 2 == 1


def vanishes_identically(q: RsQuadratic, n: int) -> bool:
    """Whether the trace form of ``q`` is the zero function on GF(2^n)."""
    m = reduce_mod(q, n)
    return is_equitable(m) or is_semi_equitable(m)


def partition_by_valuation(q: RsQuadratic) -> dict[int, RsQuadratic]:
    groups: dict[int, list[int]] = {}
    for i in q.offsets:
        groups.setdefault(nu2(i), []).append(i)
    return {mu: RsQuadratic(tuple(offs)) for mu, offs in sorted(groups.items())}


@dataclass(frozen=True)
class QuadraticAnf:
    """Explicit quadratic ANF on ``n`` variables.

    ``adj[j]`` has bit ``k`` set iff the monomial ``x_j x_k`` occurs, so the
    rows of ``adj`` form the symmetric zero-diagonal matrix of the
    associated bilinear form.  ``linear`` has bit ``j`` set iff ``x_j``
    occurs.
    """

    n: int
    adj: tuple[int, ...]
    linear: int = 0

    def monomials(self) -> list[tuple[int, int]]:
        out = []
        for j, row in enumerate(self.adj):
            row >>= j + 1
            k = j + 1
            while row:
                if row & 1:
                    out.append((j, k))
                row >>= 1
                k += 1
        return out

    def is_zero(self) -> bool:
        return self.linear == 0 and not any(self.adj)

    def evaluate(self, x: int) -> int:
        """Value at the vector with coordinate ``x_j`` in bit ``j`` of ``x``."""
        acc = (self.linear & x).bit_count()
        for j, row in enumerate(self.adj):
            if x >> j & 1:
                acc += (row & x & ~((2 << j) - 1)).bit_count()
        return acc & 1


def anf(q: RsQuadratic, n: int, semantics: Semantics | str = Semantics.ORBIT) -> QuadraticAnf:
    """Quadratic ANF of ``q`` on ``n`` variables under the given semantics."""
    semantics = Semantics(semantics)
    if n < 1:
        raise ValueError("n must be positive")
    adj = [0] * n
    linear = 0

    def toggle(a: int, b: int) -> None:
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a

    for t in q.offsets:
        r = t % n
        if semantics is Semantics.ANF:
            if r == 0:
                raise ValueError(f"offset {t} is 0 mod {n}; no (0,t)_n function exists")
            r = min(r, n - r)
            if 2 * r == n:
                for j in range(n // 2):
                    toggle(j, j + r)
                continue
        if r == 0:
            linear ^= (1 << n) - 1
            continue
        for j in range(n):
            toggle(j, (j + r) % n)
    return QuadraticAnf(n, tuple(adj), linear)
