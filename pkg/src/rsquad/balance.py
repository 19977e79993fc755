"""For which n is the trace form of q balanced?

Balancedness depends only on the 2-adic valuation of ``n`` and is never
possible above ``nu_Q``, so it suffices to test ``n = 1, 2, 4, ..., 2^nu_Q``
with the kernel criterion.  The answer is one of three shapes:

* NEVER;
* EXACT_VALUATION(k): balanced iff ``nu(n) == k`` (only for an even number of terms);
* VALUATION_AT_MOST(k): balanced iff ``nu(n) <= k`` (only for an odd number of terms).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import FalsificationError, ShapeViolationError
from .gf2poly import unit_multiplicity
from .quadform import is_balanced
from .rsq import RsQuadratic, Semantics, a_polynomial, nu2, partition_by_valuation

__all__ = [
    "BalanceProfile",
    "Shape",
    "ValuationBlock",
    "d_Q",
    "is_balanced_fast",
    "nu_Q",
    "profile",
    "valuation_partition_check",
]


class Shape(str, enum.Enum):
    NEVER = "NEVER"
    EXACT_VALUATION = "EXACT_VALUATION"
    VALUATION_AT_MOST = "VALUATION_AT_MOST"


def d_Q(q: RsQuadratic) -> int:
    """Multiplicity of ``x + 1`` in the Laurent polynomial of ``q``."""
    a = a_polynomial(q)
    assert a, "distinct offsets cannot cancel"
    return unit_multiplicity(a)


def _ceil_log2(d: int) -> int:
    return (d - 1).bit_length()


def nu_Q(q: RsQuadratic) -> int:
    """The ``nu`` with ``2^(nu-1) < d_Q <= 2^nu``."""
    return _ceil_log2(d_Q(q))


@dataclass(frozen=True)
class BalanceProfile:
    offsets: tuple[int, ...]
    shape: Shape
    k: int | None
    dQ: int
    nuQ: int
    witness: tuple[bool, ...]

    @property
    def c_or_d(self) -> int | None:
        """``k + 1``, the exponent in the modulus ``2^(k+1)`` of the closed-form description."""
        return None if self.k is None else self.k + 1

    def is_balanced_at(self, n: int) -> bool:
        nu = nu2(n)
        return nu < len(self.witness) and self.witness[nu]

    def describe(self) -> str:
        if self.shape is Shape.NEVER:
            return "never balanced"
        m = 1 << (self.k + 1)
        if self.shape is Shape.EXACT_VALUATION:
            return f"balanced iff n ≡ {1 << self.k} mod {m}"
        return f"balanced iff n ≢ 0 mod {m}"

    def to_dict(self) -> dict:
        return {
            "offsets": list(self.offsets),
            "shape": self.shape.value,
            "k": self.k,
            "c_or_d": self.c_or_d,
            "dQ": self.dQ,
            "nuQ": self.nuQ,
            "witness": [int(b) for b in self.witness],
        }


@lru_cache(maxsize=4096)
def profile(q: RsQuadratic) -> BalanceProfile:
    dq = d_Q(q)
    nq = _ceil_log2(dq)
    witness = tuple(is_balanced(q, 1 << nu, Semantics.ORBIT) for nu in range(nq + 1))
    if is_balanced(q, 1 << (nq + 1), Semantics.ORBIT):
        raise ShapeViolationError(f"balanced above nu_Q={nq}", q=q, n=1 << (nq + 1))
    hits = [nu for nu, b in enumerate(witness) if b]
    if len(q) % 2:
        k = len(hits) - 1
        if witness != tuple(nu <= k for nu in range(nq + 1)) or k < 0:
            raise ShapeViolationError(f"odd term count but witnesses {witness} are not an initial segment", q=q)
        shape = Shape.VALUATION_AT_MOST
    elif not hits:
        k, shape = None, Shape.NEVER
    else:
        if len(hits) != 1 or hits[0] == 0:
            raise ShapeViolationError(f"even term count but witnesses {witness} are not a single nu >= 1", q=q)
        k, shape = hits[0], Shape.EXACT_VALUATION
    return BalanceProfile(q.offsets, shape, k, dq, nq, witness)


def is_balanced_fast(q: RsQuadratic, n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return profile(q).is_balanced_at(n)


@dataclass(frozen=True)
class ValuationBlock:
    mu: int
    offsets: tuple[int, ...]
    dQ: int


def valuation_partition_check(q: RsQuadratic) -> tuple[int, list[ValuationBlock]]:
    """Per-valuation ``d`` values; asserts ``nu(block d) = mu + 1`` and ``d_Q = min``."""
    blocks = [ValuationBlock(mu, part.offsets, d_Q(part)) for mu, part in partition_by_valuation(q).items()]
    for blk in blocks:
        if nu2(blk.dQ) != blk.mu + 1:
            raise FalsificationError(f"block mu={blk.mu} has d={blk.dQ}", q=q)
    ds = [blk.dQ for blk in blocks]
    total = d_Q(q)
    if len(set(ds)) != len(ds) or total != min(ds):
        raise FalsificationError(f"d_Q={total} is not the minimum of distinct block values {ds}", q=q)
    return total, blocks
