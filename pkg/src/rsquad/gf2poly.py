"""Polynomials over GF(2).

A polynomial is stored as a nonnegative Python integer whose bit ``k`` is
the coefficient of ``x^k``.  Python integers are already packed machine
words, so carry-less multiplication is plain shift-and-xor.

Besides the usual ring operations this module provides the few
number-theoretic helpers the rest of the package leans on: the
multiplicity of the factor ``x + 1``, the squarefree radical, and the
smallest ``N`` with ``p | x^N + 1`` (the multiplicative order of ``x``
modulo ``p``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

from sympy import factorint

__all__ = [
    "Gf2Poly",
    "ONE",
    "X",
    "ZERO",
    "dividing_period",
    "divrem",
    "gcd",
    "max_multiplicity",
    "mul",
    "radical",
    "radical_odd_order",
    "unit_multiplicity",
]


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def _powmod(a: int, e: int, m: int) -> int:
    result = 1
    a = _divmod(a, m)[1]
    while e:
        if e & 1:
            result = _divmod(_clmul(result, a), m)[1]
        e >>= 1
        if e:
            a = _divmod(_clmul(a, a), m)[1]
    return _divmod(result, m)[1]


_TERM = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


@dataclass(frozen=True, slots=True)
class Gf2Poly:
    """Immutable polynomial over GF(2); ``bits`` holds the coefficients."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient bits must be nonnegative")

    @classmethod
    def from_exponents(cls, exponents) -> Gf2Poly:
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> Gf2Poly:
        """Parse the ``1+x+x^4`` textual form (terms in any order)."""
        text = text.replace(" ", "")
        if text == "0":
            return ZERO
        exps = []
        for term in text.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise ValueError(f"bad polynomial term {term!r}")
            if m.group(1):
                exps.append(0)
            else:
                exps.append(int(m.group(2)) if m.group(2) else 1)
        return cls.from_exponents(exps)

    @classmethod
    def from_hex(cls, text: str) -> Gf2Poly:
        return cls(int(text, 16))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    def exponents(self) -> list[int]:
        b, out, k = self.bits, [], 0
        while b:
            if b & 1:
                out.append(k)
            b >>= 1
            k += 1
        return out

    def coeffs(self) -> list[int]:
        """Coefficient list, index ``k`` for ``x^k``."""
        return [(self.bits >> k) & 1 for k in range(self.bits.bit_length())]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __call__(self, point: int) -> int:
        if point not in (0, 1):
            raise ValueError("can only evaluate at 0 or 1")
        if point == 0:
            return self.bits & 1
        return self.bits.bit_count() & 1

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(_clmul(self.bits, other.bits))

    def __pow__(self, e: int) -> Gf2Poly:
        result, base = 1, self.bits
        while e:
            if e & 1:
                result = _clmul(result, base)
            e >>= 1
            if e:
                base = _clmul(base, base)
        return Gf2Poly(result)

    def __divmod__(self, other: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
        q, r = _divmod(self.bits, other.bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return divmod(self, other)[1]

    def divides(self, other: Gf2Poly) -> bool:
        return (other % self).is_zero()

    def derivative(self) -> Gf2Poly:
        # d/dx x^k = k x^(k-1); only odd k survive in characteristic two
        odd = self.bits & int("10" * (self.bits.bit_length() // 2 + 1), 2)
        return Gf2Poly(odd >> 1)

    def sqrt(self) -> Gf2Poly:
        """Square root of a polynomial with only even exponents."""
        if self.derivative():
            raise ValueError(f"{self} is not a square")
        return Gf2Poly.from_exponents(e // 2 for e in self.exponents())

    def powmod(self, e: int, modulus: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(_powmod(self.bits, e, modulus.bits))

    def reverse(self) -> Gf2Poly:
        """Reciprocal polynomial ``x^deg p(1/x)``."""
        if not self.bits:
            return self
        return Gf2Poly(int(bin(self.bits)[2:][::-1], 2))

    def is_palindromic(self) -> bool:
        return self.reverse() == self

    def hex(self) -> str:
        return format(self.bits, "x")

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        parts = []
        for e in self.exponents():
            parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Gf2Poly({self})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)
_X_PLUS_1 = Gf2Poly(3)


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a * b


def divrem(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    return divmod(a, b)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    return Gf2Poly(_gcd(a.bits, b.bits))


def _lcm(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return (a * b) // gcd(a, b)


def unit_multiplicity(p: Gf2Poly) -> int:
    """Exact power of ``x + 1`` dividing ``p``."""
    if not p:
        raise ValueError("the zero polynomial is divisible by every power of x+1")
    k = 0
    while True:
        q, r = divmod(p, _X_PLUS_1)
        if r:
            return k
        p, k = q, k + 1


def radical(p: Gf2Poly) -> Gf2Poly:
    """Product of the distinct irreducible factors of ``p``."""
    if not p:
        raise ValueError("the zero polynomial has no radical")
    if p.degree == 0:
        return ONE
    dp = p.derivative()
    if not dp:
        return radical(p.sqrt())
    g = gcd(p, dp)
    # p/g collects every factor of odd multiplicity; g keeps the repeated ones
    return _lcm(p // g, radical(g))


def max_multiplicity(p: Gf2Poly) -> int:
    """Largest multiplicity of an irreducible factor of ``p`` (0 for constants)."""
    if not p:
        raise ValueError("zero polynomial")
    rad, e, acc = radical(p), 0, ONE
    while not p.divides(acc):
        acc, e = acc * rad, e + 1
    return e


def _distinct_degree(f: Gf2Poly) -> list[tuple[int, Gf2Poly]]:
    """Distinct-degree split of a squarefree ``f`` with ``f(0) = 1``."""
    out = []
    h, i = X, 0
    while f.degree and f.degree >= 2 * (i + 1):
        i += 1
        h = (h * h) % f
        g = gcd(f, h + X)
        if g.degree:
            out.append((i, g))
            f = f // g
            h = h % f
    if f.degree:
        out.append((f.degree, f))
    return out


def _order_mod(g: Gf2Poly, group_order: int) -> int:
    order = group_order
    for prime in factorint(group_order):
        while order % prime == 0 and X.powmod(order // prime, g) == ONE:
            order //= prime
    return order


def radical_odd_order(p: Gf2Poly) -> int:
    """Smallest odd ``m`` such that the radical of ``p`` divides ``x^m + 1``."""
    if not p or not p.bits & 1:
        raise ValueError(f"{p} must have a nonzero constant term")
    rad = radical(p)
    if rad.degree == 0:
        return 1
    orders = [_order_mod(g, (1 << d) - 1) for d, g in _distinct_degree(rad)]
    return reduce(math.lcm, orders, 1)


def dividing_period(p: Gf2Poly) -> int:
    """Smallest ``N`` with ``p | x^N + 1``, of the form ``2^t m`` with ``m`` odd."""
    m = radical_odd_order(p)
    if p.degree == 0:
        return 1
    t = 0
    # x^(2^t m) + 1 = (x^m + 1)^(2^t)
    while X.powmod(m << t, p) != ONE:
        t += 1
    return m << t
