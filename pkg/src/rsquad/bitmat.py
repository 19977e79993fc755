"""GF(2) linear algebra on int bitsets.

A matrix is a list of row integers; bit ``j`` of row ``i`` is entry
``(i, j)``.  Vectors use the same convention (bit ``j`` is coordinate ``j``).
"""

from __future__ import annotations


def rref(rows: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [r for r in rows if r]
    pivots: list[int] = []
    top = 0
    for col in range(n_cols):
        bit = 1 << col
        for r in range(top, len(work)):
            if work[r] & bit:
                work[top], work[r] = work[r], work[top]
                break
        else:
            continue
        for r in range(len(work)):
            if r != top and work[r] & bit:
                work[r] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: list[int], n_cols: int) -> int:
    return len(rref(rows, n_cols)[1])


def null_space(rows: list[int], n_cols: int) -> list[int]:
    """Basis of ``{v : M v = 0}``, one vector per free column, ascending."""
    reduced, pivots = rref(rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivots):
            if row >> free & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def mat_vec(rows: list[int], v: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        if (r & v).bit_count() & 1:
            out |= 1 << i
    return out


def transpose(rows: list[int], n_cols: int) -> list[int]:
    out = [0] * n_cols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return out
