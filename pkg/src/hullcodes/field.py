"""Finite fields GF(p^h) with integer element codes.

An element is the integer whose little-endian base-p digits are its
polynomial-basis coefficients, so over GF(4) = GF(2)[x]/(x^2+x+1) the codes
0, 1, 2, 3 are 0, 1, w, w^2 = w+1.

All array operations accept numpy integer arrays of codes and broadcast like
ordinary numpy arithmetic.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoHermitianStructure,
    NonPrimeCharacteristic,
    OddCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
    ZeroInput,
)

MAX_ORDER = 1 << 16

# little-endian coefficient lists, monic
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(p**0.5) + 1):
        if p % d == 0:
            return False
    return True


def _poly_mod(a, m, p):
    """Remainder of a modulo monic m over GF(p), coefficient lists little-endian."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return a


def _is_irreducible(m, p):
    h = len(m) - 1
    if h == 1:
        return True
    for deg in range(1, h // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if not _poly_mod(m, list(tail) + [1], p):
                return False
    return True


class Field:
    """GF(p^h) with lookup tables.

    Use :func:`field_make` rather than calling this directly; it caches one
    instance per (p, h, modulus) so fields can be compared by identity.
    """

    def __init__(self, p: int, h: int, modulus: tuple[int, ...]):
        self.p = p
        self.h = h
        self.modulus = tuple(modulus)
        self.q = p**h
        self.sub_q = p ** (h // 2) if h % 2 == 0 else None
        q = self.q
        self.dtype = np.int64

        digits = np.zeros((q, h), dtype=np.int64)
        codes = np.arange(q)
        for i in range(h):
            digits[:, i] = (codes // p**i) % p
        self._digits = digits
        self._weights = p ** np.arange(h, dtype=np.int64)

        if p == 2:
            self._add_mode = "xor"
        elif h == 1:
            self._add_mode = "mod"
        else:
            self._add_mode = "digits"
        neg = (((-digits) % p) * self._weights).sum(axis=1)
        self._neg = neg.astype(np.int64)

        self.primitive = self._find_primitive()
        exp = np.zeros(2 * (q - 1) + 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, self.primitive)
        exp[q - 1 :] = np.resize(exp[: q - 1], len(exp) - (q - 1))
        self._exp = exp
        self._log = log
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._inv = inv

    # -- construction helpers -------------------------------------------
    def _code_to_poly(self, a):
        return [int(d) for d in self._digits[a]]

    def _poly_to_code(self, coeffs):
        return int(sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs)))

    def _mul_slow(self, a, b):
        pa, pb = self._code_to_poly(a), self._code_to_poly(b)
        prod = [0] * (2 * self.h)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self._poly_to_code(_poly_mod(prod, self.modulus, self.p))

    def _find_primitive(self):
        q = self.q
        if q == 2:
            return 1
        order = q - 1
        factors = {d for d in range(2, order + 1) if order % d == 0 and is_prime(d)}
        for g in range(2, q):
            ok = True
            for f in factors:
                if self._pow_slow(g, order // f) == 1:
                    ok = False
                    break
            if ok:
                return g
        raise ReducibleModulus(f"no primitive element for modulus {self.modulus}")

    def _pow_slow(self, a, e):
        r, base = 1, a
        while e:
            if e & 1:
                r = self._mul_slow(r, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return r

    # -- identity ---------------------------------------------------------
    def __repr__(self):
        return f"GF({self.q})" if self.h == 1 else f"GF({self.q}; modulus={list(self.modulus)})"

    def __reduce__(self):
        return (field_make, (self.p, self.h, self.modulus))

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def element(self, code: int) -> "FieldElement":
        return FieldElement(int(code), self)

    def spec_string(self) -> str:
        """The ``q[:c0,c1,...]`` form accepted by :func:`parse_field`."""
        if self.h == 1 or DEFAULT_MODULI.get((self.p, self.h)) == self.modulus:
            return str(self.q)
        return f"{self.q}:" + ",".join(str(c) for c in self.modulus)

    # -- vectorised arithmetic -------------------------------------------
    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add_mode == "xor":
            return a ^ b
        if self._add_mode == "mod":
            return (a + b) % self.p
        s = (self._digits[a] + self._digits[b]) % self.p
        return s @ self._weights

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        if self.p == 2:
            return self.add(a, b)
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            return self.power(self.inv(a), -e)
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def frobenius(self, a, e: int = 1):
        """a ** (p ** e), elementwise."""
        return self.power(a, pow(self.p, e % self.h if self.h > 1 else 0))

    def conj(self, a):
        """a ** sqrt(q); the conjugation behind the Hermitian product."""
        if self.sub_q is None:
            raise NoHermitianStructure(f"{self!r} has odd extension degree")
        return self.power(a, self.sub_q)

    def sum(self, a, axis=None):
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        if self._add_mode == "xor":
            return np.bitwise_xor.reduce(a, axis=axis)
        if self._add_mode == "mod":
            return a.sum(axis=axis) % self.p
        s = self._digits[a].sum(axis=axis if axis is None or axis >= 0 else axis - 1) % self.p
        return s @ self._weights

    def in_subfield(self, a) -> np.ndarray:
        return self.conj(a) == np.asarray(a)

    def subfield_elements(self) -> np.ndarray:
        els = self.elements()
        return els[self.in_subfield(els)]


class FieldElement:
    """A single field element; thin wrapper for scalar work and doctests."""

    __slots__ = ("code", "field")

    def __init__(self, code: int, field: Field):
        if not 0 <= code < field.q:
            raise ValueError(f"code {code} out of range for {field!r}")
        self.code = int(code)
        self.field = field

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, (int, np.integer)) and other in (0, 1):
            return int(other)
        return NotImplemented

    def _wrap(self, code):
        return FieldElement(int(code), self.field)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.code, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        if b == 0:
            raise DivisionByZero("division by zero")
        return self._wrap(self.field.div(self.code, b))

    def __pow__(self, e: int):
        if self.code == 0 and e < 0:
            raise DivisionByZero("zero to a negative power")
        return self._wrap(self.field.power(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"{self.field!r}({self.code})"

    def frobenius(self, e: int = 1) -> "FieldElement":
        return self._wrap(self.field.frobenius(self.code, e))

    def conjugate(self) -> "FieldElement":
        return self._wrap(self.field.conj(self.code))


@functools.lru_cache(maxsize=None)
def _make(p, h, modulus):
    return Field(p, h, modulus)


def field_make(p: int, h: int = 1, modulus=None) -> Field:
    """Return GF(p^h), using the pinned default modulus when none is given.

    >>> F = field_make(2, 2)
    >>> int(F.mul(2, 2))
    3
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if h < 1 or p**h > MAX_ORDER:
        raise UnsupportedOrder(f"GF({p}^{h}) is outside the supported range")
    if modulus is None:
        if h == 1:
            modulus = (0, 1)
        elif (p, h) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, h)]
        else:
            raise UnsupportedOrder(f"no default modulus for GF({p}^{h}); pass one explicitly")
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != h + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {h}: {list(modulus)}")
    if h == 1:
        modulus = (0, 1)
    elif not _is_irreducible(modulus, p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return _make(p, h, modulus)


def field_from_order(q: int, modulus=None) -> Field:
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise UnsupportedOrder(f"bad field order {q}")
    h, r = 0, q
    while r % p == 0:
        r //= p
        h += 1
    if r != 1:
        raise UnsupportedOrder(f"{q} is not a prime power")
    return field_make(p, h, modulus)


def parse_field(text: str) -> Field:
    """Parse ``"q"`` or ``"q:c0,c1,...,ch"`` (modulus coefficients, constant first)."""
    q_text, _, mod_text = text.partition(":")
    modulus = None
    if mod_text:
        modulus = tuple(int(c) for c in mod_text.replace(" ", "").split(","))
    return field_from_order(int(q_text), modulus)


# -- scalar operations ----------------------------------------------------

def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field is not b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def frobenius(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a.frobenius(e)


def conjugate(a: FieldElement) -> FieldElement:
    return a.conjugate()


def sqrt_char2(a: FieldElement) -> FieldElement:
    F = a.field
    if F.p != 2:
        raise OddCharacteristic("square roots via Frobenius need characteristic 2")
    return FieldElement(int(F.power(a.code, F.q // 2)), F)


def norm_solve(u: FieldElement) -> FieldElement:
    """Smallest-code v with v ** (sub_q + 1) == u, for u in the Hermitian subfield."""
    F = u.field
    if F.sub_q is None:
        raise NoHermitianStructure(f"{F!r} has odd extension degree")
    if u.code == 0:
        raise ZeroInput("norm_solve needs a nonzero input")
    if not F.in_subfield(u.code):
        raise ValueError(f"{u!r} is not in the subfield GF({F.sub_q})")
    norms = F.power(F.elements(), F.sub_q + 1)
    hits = np.nonzero(norms == u.code)[0]
    return FieldElement(int(hits[0]), F)
