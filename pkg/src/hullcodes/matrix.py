"""Dense exact linear algebra over a :class:`~hullcodes.field.Field`.

Matrices are immutable: the entry array is stored read-only and every
operation returns a new :class:`Matrix`.  Binary matrices are row-reduced on
bit-packed words, everything else goes through the field tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, LengthMismatch, NotSquare
from .field import Field


class Matrix:
    """An immutable rows x cols matrix of field element codes."""

    __slots__ = ("field", "_a")

    def __init__(self, field: Field, entries):
        a = np.array(entries, dtype=np.int64, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise ValueError(f"entries must lie in [0, {field.q})")
        a.flags.writeable = False
        self.field = field
        self._a = a

    @classmethod
    def _wrap(cls, field: Field, a: np.ndarray) -> "Matrix":
        # trusted constructor: skips the range check and copy
        m = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.flags.writeable = False
        m.field = field
        m._a = a
        return m

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entry codes."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __getitem__(self, idx):
        return self._a[idx]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field is other.field
            and self.shape == other.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self):
        return hash((id(self.field), self.shape, self._a.tobytes()))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"Matrix({self.field!r}, {self._a.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def is_zero(self) -> bool:
        return not self._a.any()


# -- constructors -------------------------------------------------------------

def identity(field: Field, n: int) -> Matrix:
    return Matrix._wrap(field, np.eye(n, dtype=np.int64))


def zeros(field: Field, rows: int, cols: int) -> Matrix:
    return Matrix._wrap(field, np.zeros((rows, cols), dtype=np.int64))


def exchange_matrix(field: Field, n: int) -> Matrix:
    """The anti-diagonal permutation J, with J @ J = I."""
    return Matrix._wrap(field, np.eye(n, dtype=np.int64)[::-1])


def _same_field(mats: Sequence[Matrix]) -> Field:
    F = mats[0].field
    for M in mats[1:]:
        if M.field is not F:
            raise FieldMismatch(f"{F!r} vs {M.field!r}")
    return F


def hstack(mats: Sequence[Matrix]) -> Matrix:
    F = _same_field(mats)
    if len({M.rows for M in mats}) > 1:
        raise DimensionMismatch("hstack needs equal row counts")
    return Matrix._wrap(F, np.hstack([M.array for M in mats]))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    F = _same_field(mats)
    if len({M.cols for M in mats}) > 1:
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix._wrap(F, np.vstack([M.array for M in mats]))


def block_diag(mats: Sequence[Matrix]) -> Matrix:
    F = _same_field(mats)
    out = np.zeros((sum(M.rows for M in mats), sum(M.cols for M in mats)), dtype=np.int64)
    r = c = 0
    for M in mats:
        out[r : r + M.rows, c : c + M.cols] = M.array
        r += M.rows
        c += M.cols
    return Matrix._wrap(F, out)


# -- products -----------------------------------------------------------------

def _matmul_arrays(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    m, inner = A.shape
    p = B.shape[1]
    if F.h == 1:
        if inner * (F.p - 1) ** 2 < 2**62:
            return (A @ B) % F.p
    if m * inner * p <= 4_000_000:
        prod = F.mul(A[:, :, None], B[None, :, :])
        return F.sum(prod, axis=1)
    acc = np.zeros((m, p), dtype=np.int64)
    for l in range(inner):
        acc = F.add(acc, F.mul(A[:, l, None], B[None, l, :]))
    return acc


def mat_mul(M: Matrix, N: Matrix) -> Matrix:
    F = _same_field([M, N])
    if M.cols != N.rows:
        raise DimensionMismatch(f"cannot multiply {M.shape} by {N.shape}")
    return Matrix._wrap(F, _matmul_arrays(F, M.array, N.array))


def transpose(M: Matrix) -> Matrix:
    return Matrix._wrap(M.field, M.array.T)


def conjugate(M: Matrix) -> Matrix:
    """Entrywise a -> a^sqrt(q)."""
    return Matrix._wrap(M.field, M.field.conj(M.array))


def conj_transpose(M: Matrix) -> Matrix:
    return Matrix._wrap(M.field, M.field.conj(M.array).T)


def scale_columns(M: Matrix, v) -> Matrix:
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.cols,):
        raise LengthMismatch(f"need {M.cols} column scalars, got {v.shape}")
    return Matrix._wrap(M.field, M.field.mul(M.array, v[None, :]))


def scalar_mul(M: Matrix, c: int) -> Matrix:
    return Matrix._wrap(M.field, M.field.mul(M.array, c))


def mat_add(M: Matrix, N: Matrix) -> Matrix:
    F = _same_field([M, N])
    if M.shape != N.shape:
        raise DimensionMismatch(f"cannot add {M.shape} and {N.shape}")
    return Matrix._wrap(F, F.add(M.array, N.array))


# -- row reduction ------------------------------------------------------------

def _pack_gf2(a: np.ndarray) -> np.ndarray:
    m, n = a.shape
    words = max(1, (n + 63) // 64)
    bits = np.zeros((m, words * 64), dtype=np.uint8)
    bits[:, :n] = a
    return np.packbits(bits, axis=1, bitorder="little").view(np.uint64).copy()


def _unpack_gf2(P: np.ndarray, n: int) -> np.ndarray:
    bits = np.unpackbits(P.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n].astype(np.int64)


def _rref_gf2(a: np.ndarray):
    m, n = a.shape
    P = _pack_gf2(a)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        w, b = divmod(c, 64)
        bit = np.uint64(b)
        col = ((P[r:, w] >> bit) & np.uint64(1)).astype(bool)
        hits = np.flatnonzero(col)
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            P[[r, i]] = P[[i, r]]
        mask = ((P[:, w] >> bit) & np.uint64(1)).astype(bool)
        mask[r] = False
        if mask.any():
            P[mask, w:] ^= P[r, w:]
        pivots.append(c)
        r += 1
    return _unpack_gf2(P, n), r, pivots


def _rref_generic(F: Field, a: np.ndarray):
    R = a.copy()
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        hits = np.flatnonzero(R[r:, c])
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        if R[r, c] != 1:
            R[r] = F.mul(R[r], F.inv(R[r, c]))
        f = R[:, c].copy()
        f[r] = 0
        rows = np.flatnonzero(f)
        if rows.size:
            R[rows] = F.sub(R[rows], F.mul(f[rows, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def _rref_array(F: Field, a: np.ndarray):
    if a.size == 0:
        return a.copy(), 0, []
    if F.q == 2:
        return _rref_gf2(a)
    return _rref_generic(F, a)


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    >>> from hullcodes.field import field_make
    >>> R, r, piv = rref(Matrix(field_make(2), [[1, 1], [1, 1]]))
    >>> R.tolist(), r, piv
    ([[1, 1], [0, 0]], 1, [0])
    """
    R, r, piv = _rref_array(M.field, M.array)
    return Matrix._wrap(M.field, R), r, piv


def rank(M: Matrix) -> int:
    return _rref_array(M.field, M.array)[1]


def _kernel_from_rref(F: Field, R: np.ndarray, r: int, pivots: list[int], n: int) -> np.ndarray:
    free = np.setdiff1d(np.arange(n), pivots)
    K = np.zeros((free.size, n), dtype=np.int64)
    if free.size == 0:
        return K
    K[np.arange(free.size), free] = 1
    if r:
        K[:, pivots] = F.neg(R[:r][:, free]).T
    return K


def kernel(M: Matrix) -> Matrix:
    """Basis (as rows) of the right null space {x : M x^T = 0}."""
    R, r, piv = _rref_array(M.field, M.array)
    return Matrix._wrap(M.field, _kernel_from_rref(M.field, R, r, piv, M.cols))


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise NotSquare(f"matrix of shape {M.shape} is not square")
    n = M.rows
    aug = np.hstack([M.array, np.eye(n, dtype=np.int64)])
    R, r, piv = _rref_array(M.field, aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix._wrap(M.field, R[:, n:])


# -- structured matrices ------------------------------------------------------

@dataclass(frozen=True)
class ToeplitzSpec:
    """Diagonal value t, upper sequence a_1..a_{n-1}, lower sequence b_1..b_{n-1}."""

    t: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def n(self) -> int:
        return len(self.a) + 1


def toeplitz(field: Field, spec: ToeplitzSpec, n: int) -> Matrix:
    if len(spec.a) != n - 1 or len(spec.b) != n - 1:
        raise LengthMismatch(f"Toeplitz sequences must have length {n - 1}")
    diag = np.concatenate([spec.b[::-1], [spec.t], spec.a]).astype(np.int64)
    i, j = np.indices((n, n))
    # diagonal offset j - i runs from -(n-1) to n-1
    return Matrix(field, diag[j - i + n - 1])


def poly_eval_matrix(f: Sequence[int], A: Matrix) -> Matrix:
    """f(A) = sum f_i A^i, coefficients given constant term first."""
    if A.rows != A.cols:
        raise NotSquare(f"matrix of shape {A.shape} is not square")
    F = A.field
    n = A.rows
    acc = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in reversed(list(f)):
        acc = _matmul_arrays(F, acc, A.array)
        acc = F.add(acc, F.mul(eye, int(c)))
    return Matrix._wrap(F, acc)


def monomial_check(Q: Matrix) -> bool:
    """True iff Q is square with exactly one nonzero entry in every row and column."""
    if Q.rows != Q.cols:
        raise NotSquare(f"matrix of shape {Q.shape} is not square")
    nz = Q.array != 0
    return bool((nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all())
