"""Truth tables, Walsh spectra and nonlinearity by brute force.

Table index ``v`` encodes ``(x_0, ..., x_(n-1))`` with ``x_0`` in the most
significant bit, i.e. rows are in lexicographic order.  Walsh indices use
the same encoding.  Everything here is an oracle for the closed forms in
:mod:`rsquad.quadform`, so it stays deliberately simple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .rsq import QuadraticAnf, RsQuadratic, Semantics, anf

MAX_VARS = 28
_CHUNK = 1 << 20

__all__ = [
    "MAX_VARS",
    "TruthTable",
    "WalshSpectrum",
    "load_table",
    "nonlinearity",
    "save_table",
    "table_from_anf",
    "table_from_quadratic",
    "walsh",
    "weight",
]


@dataclass(frozen=True, eq=False)
class TruthTable:
    n: int
    packed: np.ndarray  # uint8, little-endian bit order, 2^n bits

    def __post_init__(self):
        if self.packed.dtype != np.uint8 or self.packed.size * 8 < (1 << self.n):
            raise ValueError("packed table has the wrong size or dtype")

    @classmethod
    def from_bits(cls, n: int, bits) -> TruthTable:
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.size != 1 << n:
            raise ValueError(f"expected {1 << n} entries, got {bits.size}")
        return cls(n, np.packbits(bits, bitorder="little"))

    def bits(self) -> np.ndarray:
        return np.unpackbits(self.packed, count=1 << self.n, bitorder="little")

    def __getitem__(self, v: int) -> int:
        return int(self.packed[v >> 3] >> (v & 7) & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, TruthTable) and self.n == other.n and np.array_equal(self.bits(), other.bits())

    def is_zero(self) -> bool:
        return not self.packed.any()


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    n: int
    values: np.ndarray

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())

    def __getitem__(self, w: int) -> int:
        return int(self.values[w])


def table_from_quadratic(f: QuadraticAnf) -> TruthTable:
    n = f.n
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"n must be in [1, {MAX_VARS}], got {n}")
    size = 1 << n
    monos = f.monomials()
    linear = [j for j in range(n) if f.linear >> j & 1]
    out = np.empty(size, dtype=np.uint8)
    for start in range(0, size, _CHUNK):
        idx = np.arange(start, min(size, start + _CHUNK), dtype=np.uint32)
        x = [((idx >> np.uint32(n - 1 - j)) & 1).astype(np.uint8) for j in range(n)]
        acc = np.zeros(idx.size, dtype=np.uint8)
        for j, k in monos:
            acc ^= x[j] & x[k]
        for j in linear:
            acc ^= x[j]
        out[start:start + idx.size] = acc
    return TruthTable(n, np.packbits(out, bitorder="little"))


def table_from_anf(q: RsQuadratic, n: int, semantics: Semantics | str = Semantics.ANF) -> TruthTable:
    return table_from_quadratic(anf(q, n, semantics))


def weight(t: TruthTable) -> int:
    return int(np.bitwise_count(t.packed).sum())


def walsh(t: TruthTable) -> WalshSpectrum:
    """Full spectrum by an in-place fast Walsh-Hadamard transform."""
    if t.n > MAX_VARS:
        raise ValueError(f"n={t.n} exceeds the {MAX_VARS}-variable cap")
    size = 1 << t.n
    a = 1 - 2 * t.bits().astype(np.int64)
    h = 1
    while h < size:
        blocks = a.reshape(-1, 2, h)
        lo = blocks[:, 0, :].copy()
        hi = blocks[:, 1, :]
        blocks[:, 0, :] += hi
        blocks[:, 1, :] = lo - hi
        h <<= 1
    return WalshSpectrum(t.n, a)


def nonlinearity(t: TruthTable) -> int:
    return (1 << (t.n - 1)) - walsh(t).max_abs() // 2


def save_table(t: TruthTable, path, *, semantics: str, offsets) -> None:
    """Write the packed bits to ``path`` and a JSON header to ``path.json``."""
    path = Path(path)
    path.write_bytes(t.packed.tobytes())
    header = {"n": t.n, "semantics": str(Semantics(semantics).value), "offsets": list(offsets)}
    path.with_name(path.name + ".json").write_text(json.dumps(header, sort_keys=True) + "\n")


def load_table(path) -> tuple[TruthTable, dict]:
    path = Path(path)
    header = json.loads(path.with_name(path.name + ".json").read_text())
    packed = np.frombuffer(path.read_bytes(), dtype=np.uint8).copy()
    return TruthTable(header["n"], packed), header
