"""Codeword enumeration kernels.

The message space is split into a low block, whose q^k_lo codewords are
tabulated once, and a high block that is walked in batches; every codeword is
low + high.  Binary codes are bit-packed into uint64 words so one XOR and a
popcount handle 64 coordinates at a time.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .field import Field

LOW_TABLE_TARGET = 1 << 16
BATCH_ELEMENTS = 1 << 23


def _split(k: int, q: int) -> int:
    k_lo = 0
    while k_lo < k and q ** (k_lo + 1) <= LOW_TABLE_TARGET:
        k_lo += 1
    return max(k_lo, 1) if k else 0


def _span_table_xor(rows: np.ndarray) -> np.ndarray:
    """All 2^r sums of the packed rows, built by doubling."""
    r, w = rows.shape
    T = np.zeros((1 << r, w), dtype=rows.dtype)
    for i in range(r):
        T[1 << i : 2 << i] = T[: 1 << i] ^ rows[i]
    return T


def _pack_rows(G: np.ndarray) -> np.ndarray:
    k, n = G.shape
    words = max(1, (n + 63) // 64)
    bits = np.zeros((k, words * 64), dtype=np.uint8)
    bits[:, :n] = G
    return np.packbits(bits, axis=1, bitorder="little").view(np.uint64).copy()


def _binary_weights(G: np.ndarray, n: int, visit) -> None:
    k = G.shape[0]
    P = _pack_rows(G)
    k_lo = _split(k, 2)
    lo = _span_table_xor(P[:k_lo])
    hi = _span_table_xor(P[k_lo:])
    step = max(1, BATCH_ELEMENTS // max(1, lo.size))
    for s in range(0, hi.shape[0], step):
        block = lo[None, :, :] ^ hi[s : s + step, None, :]
        visit(np.bitwise_count(block).sum(axis=2, dtype=np.int64).ravel())


def _span_table_field(F: Field, rows: np.ndarray, add_table) -> np.ndarray:
    r, n = rows.shape
    q = F.q
    T = np.zeros((1, n), dtype=np.int64)
    els = F.elements()
    for i in range(r):
        multiples = F.mul(els[:, None], rows[i][None, :])  # q x n
        T = add_table(T[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return T


def _adder(F: Field):
    if F.p == 2:
        return np.bitwise_xor
    if F.h == 1:
        return lambda a, b: (a + b) % F.p
    table = F.add(F.elements()[:, None], F.elements()[None, :])
    return lambda a, b: table[a, b]


def _field_weights(F: Field, G: np.ndarray, visit) -> None:
    k, n = G.shape
    add = _adder(F)
    k_lo = _split(k, F.q)
    small = np.uint8 if F.q <= 256 else np.uint16
    lo = _span_table_field(F, G[:k_lo], add).astype(small)
    hi = _span_table_field(F, G[k_lo:], add).astype(small)
    step = max(1, BATCH_ELEMENTS // max(1, lo.size))
    for s in range(0, hi.shape[0], step):
        block = add(lo[None, :, :], hi[s : s + step, None, :])
        visit(np.count_nonzero(block, axis=2).ravel())


def enumerate_weights(F: Field, G: np.ndarray, visit) -> None:
    """Call ``visit`` with arrays of weights covering every codeword exactly once."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        visit(np.zeros(1, dtype=np.int64))
        return
    if F.q == 2:
        _binary_weights(G, n, visit)
    else:
        _field_weights(F, G, visit)


def min_weight(F: Field, G: np.ndarray) -> int:
    """Smallest nonzero codeword weight of the span of G (rows independent)."""
    best = [G.shape[1] + 1]

    def visit(w):
        nz = w[w > 0]
        if nz.size:
            best[0] = min(best[0], int(nz.min()))

    enumerate_weights(F, G, visit)
    return best[0]


def weight_counts(F: Field, G: np.ndarray) -> list[int]:
    """A_0..A_n for the span of G."""
    n = G.shape[1]
    acc = np.zeros(n + 1, dtype=np.int64)

    def visit(w):
        acc[:] += np.bincount(w, minlength=n + 1)

    enumerate_weights(F, G, visit)
    return [int(x) for x in acc]


def macwilliams(dual_counts: list[int], q: int) -> list[int]:
    """Weight distribution of C from that of its (Euclidean or Hermitian) dual.

    Exact integer arithmetic through Krawtchouk polynomials.
    """
    n = len(dual_counts) - 1
    size = sum(dual_counts)
    out = []
    for j in range(n + 1):
        total = 0
        for i, b in enumerate(dual_counts):
            if not b:
                continue
            kj = 0
            for s in range(0, min(i, j) + 1):
                if j - s > n - i:
                    continue
                kj += (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
            total += b * kj
        if total % size:
            raise ArithmeticError("non-integral MacWilliams transform")
        out.append(total // size)
    return out
