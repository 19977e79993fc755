"""GF(2^n) in a polynomial basis, with the absolute trace.

Elements are ints below ``2^n``; bit ``k`` is the coordinate on ``x^k``.
The modulus is the smallest irreducible polynomial of degree ``n`` when
polynomials are ordered by their coefficient bit pattern, so every table
this module produces is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import bitmat
from .gf2poly import ONE, X, Gf2Poly, gcd
from .rsq import RsQuadratic

MAX_DEGREE = 24

__all__ = [
    "FieldCtx",
    "MAX_DEGREE",
    "eval_trace_form",
    "field_new",
    "is_irreducible",
    "linearized_kernel",
    "linearized_map",
    "trace_form_table",
]


def is_irreducible(f: Gf2Poly) -> bool:
    """Rabin-style test: no factor of degree <= deg(f)/2."""
    n = f.degree
    if n is None or n < 1:
        return False
    if n == 1:
        return True
    h = X
    for _ in range(n // 2):
        h = (h * h) % f
        if gcd(f, h + X) != ONE:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    n: int
    modulus: Gf2Poly
    _mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.modulus.degree != self.n or not is_irreducible(self.modulus):
            raise ValueError(f"{self.modulus} is not irreducible of degree {self.n}")
        object.__setattr__(self, "_mask", (1 << self.n) - 1)

    @property
    def order(self) -> int:
        return 1 << self.n

    def check(self, a: int) -> int:
        if not 0 <= a <= self._mask:
            raise ValueError(f"{a:#x} is not an element of GF(2^{self.n})")
        return a

    def mul(self, a: int, b: int) -> int:
        n, mod = self.n, self.modulus.bits
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a >> n & 1:
                a ^= mod
        return acc

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def frobenius(self, a: int, i: int) -> int:
        """``a^(2^i)``; ``i`` is reduced mod ``n`` first."""
        for _ in range(i % self.n):
            a = self.mul(a, a)
        return a

    def trace(self, a: int) -> int:
        acc, y = a, a
        for _ in range(self.n - 1):
            y = self.mul(y, y)
            acc ^= y
        if acc not in (0, 1):
            raise ArithmeticError("trace left the prime field")
        return acc

    @cached_property
    def trace_mask(self) -> int:
        """Bit ``k`` is ``Tr(x^k)``; ``Tr(a)`` is the parity of ``a & trace_mask``."""
        return sum(self.trace(1 << k) << k for k in range(self.n))

    def _linear_images(self, fn) -> list[int]:
        return [fn(1 << k) for k in range(self.n)]

    def _apply_linear(self, images: list[int], xs: np.ndarray) -> np.ndarray:
        out = np.zeros_like(xs)
        for k, img in enumerate(images):
            if img:
                out ^= np.where((xs >> k) & 1, np.uint32(img), np.uint32(0))
        return out

    def _mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(a)
        a = a.copy()
        top, mod = np.uint32(1 << self.n), np.uint32(self.modulus.bits)
        for k in range(self.n):
            acc ^= np.where((b >> k) & 1, a, np.uint32(0))
            a = a << np.uint32(1)
            a ^= np.where(a & top, mod, np.uint32(0))
        return acc

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.uint32)

    def to_hex(self, a: int) -> str:
        return format(self.check(a), "x")

    def from_hex(self, text: str) -> int:
        return self.check(int(text, 16))


def field_new(n: int) -> FieldCtx:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"field degree must be in [1, {MAX_DEGREE}], got {n}")
    bits = (1 << n) | 1
    while not is_irreducible(Gf2Poly(bits)):
        bits += 2
    return FieldCtx(n, Gf2Poly(bits))


def eval_trace_form(ctx: FieldCtx, q: RsQuadratic, x: int) -> int:
    """``sum_i Tr(x^(2^i + 1))`` over the offsets of ``q``."""
    ctx.check(x)
    acc = 0
    for i in q.offsets:
        acc ^= ctx.trace(ctx.mul(ctx.frobenius(x, i), x))
    return acc


def trace_form_table(ctx: FieldCtx, q: RsQuadratic) -> np.ndarray:
    """Values of the trace form at every element, as a uint8 array indexed by element."""
    # sum_i Tr(x * x^(2^i)) = Tr(x * L(x)) with L = sum_i Frob^i linear
    images = [0] * ctx.n
    for i in q.offsets:
        frob = ctx._linear_images(lambda a, i=i: ctx.frobenius(a, i))
        images = [u ^ v for u, v in zip(images, frob)]
    xs = ctx.elements()
    y = ctx._mul_vec(xs, ctx._apply_linear(images, xs))
    return (np.bitwise_count(y & np.uint32(ctx.trace_mask)) & 1).astype(np.uint8)


def linearized_map(ctx: FieldCtx, q: RsQuadratic, a: int) -> int:
    """``sum_i (a^(2^(n-i)) + a^(2^i))`` over the offsets of ``q``."""
    acc = 0
    for i in q.offsets:
        acc ^= ctx.frobenius(a, -i) ^ ctx.frobenius(a, i)
    return acc


def linearized_kernel(ctx: FieldCtx, q: RsQuadratic) -> list[int]:
    """GF(2)-basis of the kernel of :func:`linearized_map`."""
    cols = ctx._linear_images(lambda a: linearized_map(ctx, q, a))
    return bitmat.null_space(bitmat.transpose(cols, ctx.n), ctx.n)
