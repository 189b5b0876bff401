"""Generalized Reed-Solomon codes, their duals, and self-orthogonal GRS families.

An evaluation point is a field element code or the string ``"inf"``; the
infinity column of an extended GRS code carries the coefficient of x^(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .code import DEFAULT_CAP, LinearCode, classify, dual, gram, CodeReport
from .constructions import u_uv
from .errors import (
    DuplicatePoints,
    ExtendedNotSupported,
    FieldMismatch,
    NoHermitianStructure,
    OddCharacteristic,
    ParameterOutOfRange,
    SelfCheckFailed,
    ZeroScalar,
)
from .field import Field, FieldElement, field_make, norm_solve, sqrt_char2
from .matrix import _rref_array
from .recipe import ConstructionRecipe

INF = "inf"
Point = Union[int, str]


@dataclass(frozen=True)
class GrsSpec:
    """Points a, column scalars v and dimension k of a (possibly extended) GRS code."""

    field: Field
    points: tuple[Point, ...]
    scalars: tuple[int, ...]
    k: int

    def __post_init__(self):
        pts = tuple(INF if p == INF else int(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "scalars", tuple(int(v) for v in self.scalars))
        q = self.field.q
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("evaluation points must be distinct")
        if len(self.scalars) != len(pts):
            raise ValueError("one scalar per evaluation point is required")
        if any(v == 0 for v in self.scalars):
            raise ZeroScalar("column scalars must be nonzero")
        if any(p != INF and not 0 <= p < q for p in pts) or any(
            not 0 <= v < q for v in self.scalars
        ):
            raise ValueError(f"points and scalars must be elements of GF({q})")
        if not 1 <= self.k <= len(pts):
            raise ParameterOutOfRange(f"need 1 <= k <= n, got k={self.k}, n={len(pts)}")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def extended(self) -> bool:
        return INF in self.points

    def to_dict(self) -> dict:
        return {
            "q": self.field.q,
            "field": self.field.spec_string(),
            "points": list(self.points),
            "scalars": list(self.scalars),
            "k": self.k,
        }

    @classmethod
    def from_dict(cls, d: dict, field: Optional[Field] = None) -> "GrsSpec":
        from .field import field_from_order, parse_field

        if field is None:
            field = parse_field(str(d["field"])) if "field" in d else field_from_order(int(d["q"]))
        return cls(field, tuple(d["points"]), tuple(d["scalars"]), int(d["k"]))


def grs_generator(spec: GrsSpec) -> np.ndarray:
    F = spec.field
    G = np.zeros((spec.k, spec.n), dtype=np.int64)
    for i, (a, v) in enumerate(zip(spec.points, spec.scalars)):
        if a == INF:
            G[spec.k - 1, i] = v
        else:
            G[:, i] = F.mul(v, [F.power(a, j) for j in range(spec.k)])
    return G


def grs_code(spec: GrsSpec) -> LinearCode:
    """The MDS code with rows v_i a_i^j, j < k (design distance n - k + 1)."""
    rec = ConstructionRecipe("grs", (), spec.to_dict())
    return LinearCode(
        spec.field, grs_generator(spec), recipe=rec, design_distance=spec.n - spec.k + 1
    )


def _dual_scalars(F: Field, points: Sequence[int], scalars: Sequence[int]) -> tuple[int, ...]:
    a = np.asarray(points, dtype=np.int64)
    out = []
    for i in range(len(a)):
        diffs = F.sub(a[i], np.delete(a, i))
        prod = int(F.mul(scalars[i], 1))
        for d in diffs:
            prod = int(F.mul(prod, d))
        out.append(int(F.inv(prod)))
    return tuple(out)


def grs_dual_euclidean(spec: GrsSpec) -> GrsSpec:
    """GRS_{n-k}(a, v') with v'_i = (v_i prod_{j != i}(a_i - a_j))^-1."""
    if spec.extended:
        raise ExtendedNotSupported("use the kernel of the generator for extended codes")
    F = spec.field
    if spec.k == spec.n:
        raise ParameterOutOfRange("the dual of the full space is the zero code")
    out = GrsSpec(F, spec.points, _dual_scalars(F, spec.points, spec.scalars), spec.n - spec.k)
    C, D = grs_code(spec), grs_code(out)
    if not gram(C, D).is_zero() or C.k + D.k != C.n:
        raise SelfCheckFailed("dual scalars do not annihilate the code")
    return out


def grs_dual_hermitian(spec: GrsSpec) -> GrsSpec:
    """Hermitian dual: the Euclidean dual of the conjugated spec."""
    F = spec.field
    if F.sub_q is None:
        raise NoHermitianStructure(f"{F!r} has odd extension degree")
    if spec.extended:
        raise ExtendedNotSupported("use the kernel of the generator for extended codes")
    conj = GrsSpec(
        F,
        tuple(int(x) for x in F.conj(list(spec.points))),
        tuple(int(x) for x in F.conj(list(spec.scalars))),
        spec.k,
    )
    out = grs_dual_euclidean(conj)
    if not gram(grs_code(spec), grs_code(out), "hermitian").is_zero():
        raise SelfCheckFailed("Hermitian dual scalars do not annihilate the code")
    return out


def with_dimension(spec: GrsSpec, k: int) -> GrsSpec:
    return GrsSpec(spec.field, spec.points, spec.scalars, k)


def grs_nested(spec: GrsSpec, k1: int, k2: int) -> bool:
    """Whether GRS_k1(a, v) lies inside GRS_k2(a, v), by row reduction."""
    small = grs_code(with_dimension(spec, k1))
    big = grs_code(with_dimension(spec, k2))
    stacked = np.vstack([big.G, small.G])
    return _rref_array(spec.field, stacked)[1] == big.k


# -- self-orthogonal families ---------------------------------------------------------

def _so_check(spec: GrsSpec, flavor: str) -> GrsSpec:
    if not gram(grs_code(spec), None, flavor).is_zero():
        raise SelfCheckFailed(f"{flavor} Gram matrix of the GRS code is not zero")
    return spec


def _char2_base(F: Field, hermitian: bool) -> int:
    if F.p != 2:
        raise OddCharacteristic("self-orthogonal GRS constructions need characteristic 2")
    if hermitian:
        if F.sub_q is None:
            raise NoHermitianStructure(f"{F!r} has odd extension degree")
        base = F.sub_q
    else:
        base = F.q
    if base < 4:
        raise ParameterOutOfRange("need a base field of order at least 4")
    return base


def _lagrange_weights(F: Field, points: Sequence[int]) -> list[int]:
    """u_i = prod_{j != i} (a_i - a_j)^-1."""
    return list(_dual_scalars(F, points, [1] * len(points)))


def grs_so_euclidean(F: Field, n: int, k: int) -> GrsSpec:
    """Euclidean self-orthogonal [n, k] GRS code on the first n field elements."""
    q = _char2_base(F, hermitian=False)
    if not (3 < n <= q and 1 <= k <= n // 2):
        raise ParameterOutOfRange(f"need 3 < n <= {q} and 1 <= k <= n/2")
    points = list(range(n))
    v = [sqrt_char2(FieldElement(u, F)).code for u in _lagrange_weights(F, points)]
    return _so_check(GrsSpec(F, points, v, k), "euclidean")


def grs_so_hermitian(F: Field, n: int, k: int) -> GrsSpec:
    """Hermitian self-orthogonal [n, k] GRS code on the first n subfield elements."""
    q = _char2_base(F, hermitian=True)
    if not (1 <= n <= q and 1 <= k <= n // 2):
        raise ParameterOutOfRange(f"need n <= {q} and 1 <= k <= n/2")
    points = [int(x) for x in F.subfield_elements()[:n]]
    v = [norm_solve(FieldElement(u, F)).code for u in _lagrange_weights(F, points)]
    return _so_check(GrsSpec(F, points, v, k), "hermitian")


def grs_so_hermitian_extended(F: Field) -> GrsSpec:
    """Hermitian self-orthogonal [Q+1, q] extended GRS code, Q = q^2, unit scalars."""
    q = _char2_base(F, hermitian=True)
    points = list(range(F.q)) + [INF]
    return _so_check(GrsSpec(F, points, [1] * len(points), q), "hermitian")


def grs_from_parameters(p: dict, F: Optional[Field] = None) -> LinearCode:
    """Build a GRS code from a recipe parameter record."""
    from .field import field_from_order

    if F is None and "q" in p:
        F = field_from_order(int(p["q"]))
    kind = p.get("construction", "spec")
    if kind == "spec":
        return grs_code(GrsSpec.from_dict(p, F if "field" not in p else None))
    if kind == "so_euclidean":
        spec = grs_so_euclidean(F, int(p["n"]), int(p["k"]))
    elif kind == "so_hermitian":
        spec = grs_so_hermitian(F, int(p["n"]), int(p["k"]))
    elif kind == "so_hermitian_extended":
        if F is None:
            F = field_from_order(int(p["base_q"]) ** 2)
        spec = grs_so_hermitian_extended(F)
    else:
        raise ValueError(f"unknown GRS construction {kind!r}")
    return grs_code(spec)


# -- nested subcodes of extended duals --------------------------------------------------

def _poly_mul(F: Field, f: Sequence[int], g: Sequence[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = int(F.add(out[i + j], F.mul(x, y)))
    return out


def _poly_eval(F: Field, f: Sequence[int], xs) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(list(f)):
        acc = F.add(F.mul(acc, xs), c)
    return acc


def _rootless_monic(F: Field, degree: int) -> list[int]:
    """Lowest-code monic polynomial of the given degree (2 or 3) with no roots in F."""
    els = F.elements()
    for code in range(F.q**degree):
        tail = [(code // F.q**i) % F.q for i in range(degree)]
        f = tail + [1]
        if tail[0] and np.all(_poly_eval(F, f, els) != 0):
            return f
    raise ValueError(f"no root-free polynomial of degree {degree}")


def rootless_form(F: Field, degree: int) -> list[int]:
    """Monic polynomial of the given degree with no roots in F (degree != 1)."""
    if degree == 0:
        return [1]
    if degree == 1:
        raise ParameterOutOfRange("every linear polynomial has a root")
    m2 = _rootless_monic(F, 2)
    f = [1]
    if degree % 2:
        f = _rootless_monic(F, 3)
        degree -= 3
    for _ in range(degree // 2):
        f = _poly_mul(F, f, m2)
    return f


def extended_subcode(spec: GrsSpec, k1: int) -> GrsSpec:
    """An MDS [n, k1] extended GRS subcode of the extended GRS code ``spec``.

    The subcode is {M g : deg g < k1} with M root-free of degree k - k1, so
    it is again an extended GRS code with scalars v_i M(a_i) and the same
    infinity scalar (M is monic).  Needs k - k1 != 1.
    """
    F = spec.field
    M = rootless_form(F, spec.k - k1)
    finite = [i for i, a in enumerate(spec.points) if a != INF]
    pts = np.array([spec.points[i] for i in finite], dtype=np.int64)
    scal = list(spec.scalars)
    mv = _poly_eval(F, M, pts)
    for idx, i in enumerate(finite):
        scal[i] = int(F.mul(scal[i], mv[idx]))
    return GrsSpec(F, spec.points, tuple(scal), k1)


def extended_dual_hermitian(spec: GrsSpec) -> GrsSpec:
    """Hermitian dual of an all-points extended GRS code with unit scalars.

    In characteristic 2 it is the extended GRS code of dimension n - k on the
    conjugated points with unit scalars; verified against the kernel.
    """
    F = spec.field
    if not spec.extended or set(spec.scalars) != {1} or spec.n != F.q + 1:
        raise ExtendedNotSupported("only the all-points unit-scalar extended code is covered")
    pts = [int(x) for x in F.conj([p for p in spec.points if p != INF])] + [INF]
    out = GrsSpec(F, pts, [1] * spec.n, spec.n - spec.k)
    if grs_code(out) != dual(grs_code(spec), "hermitian"):
        raise SelfCheckFailed("closed-form extended Hermitian dual disagrees with the kernel")
    return out


# -- table builders ------------------------------------------------------------------------

@dataclass
class GrsTableRow:
    q: int
    c1: LinearCode
    c2: LinearCode
    code: LinearCode
    report: CodeReport
    note: str = ""


def _finish_row(F, c1, c2, flavor, cap, note=""):
    code = u_uv(c1, c2, cap)
    if not gram(code, None, flavor).is_zero():
        raise SelfCheckFailed(f"{code!r} is not {flavor} self-orthogonal")
    for C in (c1, c2):
        if C.q ** C.k <= cap or C.q ** (C.n - C.k) <= cap:
            from .code import min_distance

            min_distance(C, cap)
    rep = classify(code, cap)
    return GrsTableRow(F.q, c1, c2, code, rep, note)


def _nested_row(F, c2_spec, k1, flavor, cap):
    dual_spec = grs_dual_euclidean(c2_spec) if flavor == "euclidean" else grs_dual_hermitian(c2_spec)
    c1 = grs_code(with_dimension(dual_spec, k1))
    return _finish_row(F, c1, grs_code(c2_spec), flavor, cap)


TABLE4_LAYOUT = [
    # (field order, n, k1, k2)
    (4, 4, 1, 1), (4, 4, 2, 1), (4, 4, 3, 1),
    (8, 4, 2, 1), (8, 4, 3, 1),
    (8, 5, 3, 1), (8, 5, 3, 2),
    (8, 6, 3, 1), (8, 6, 4, 1), (8, 6, 4, 2),
    (8, 7, 4, 1), (8, 7, 5, 1), (8, 7, 5, 2),
    (8, 8, 4, 1), (8, 8, 5, 1), (8, 8, 6, 1), (8, 8, 6, 2),
]

TABLE5_SMALL_LAYOUT = [
    (16, 2, 1, 1), (16, 3, 2, 1), (16, 4, 3, 1),
    (64, 2, 1, 1), (64, 3, 2, 1), (64, 4, 3, 1),
    (64, 5, 3, 1), (64, 5, 3, 2),
    (64, 6, 4, 1), (64, 6, 4, 2),
    (64, 7, 4, 1), (64, 7, 5, 2),
    (64, 8, 5, 1), (64, 8, 5, 2), (64, 8, 6, 2),
]

TABLE5_EXTENDED_LAYOUT = [(16, 11), (16, 12), (16, 13), (64, 37), (64, 42), (64, 47), (64, 52), (64, 57)]


def _field_of_order(q: int) -> Field:
    from .field import field_from_order

    return field_from_order(q)


def build_table4(cap: int = DEFAULT_CAP, rows=None) -> list[GrsTableRow]:
    """Euclidean self-orthogonal (u|u+v) codes over GF(4) and GF(8)."""
    out = []
    for idx, (q, n, k1, k2) in enumerate(TABLE4_LAYOUT):
        if rows is not None and idx not in rows:
            continue
        F = _field_of_order(q)
        out.append(_nested_row(F, grs_so_euclidean(F, n, k2), k1, "euclidean", cap))
    return out


def _extended_row(q, k1, cap):
    F = _field_of_order(q)
    c2_spec = grs_so_hermitian_extended(F)
    dual_spec = extended_dual_hermitian(c2_spec)
    if dual_spec.k - k1 == 1:
        # no root-free linear form exists; settle for the subcode vanishing at infinity
        finite = [i for i, a in enumerate(dual_spec.points) if a != INF]
        G = np.zeros((k1, dual_spec.n), dtype=np.int64)
        G[:, finite] = grs_generator(
            GrsSpec(F, [dual_spec.points[i] for i in finite], [1] * len(finite), k1)
        )
        c1 = LinearCode(F, G, design_distance=F.q - k1 + 1)
        note = "codimension-one subcode; an MDS choice would need a root-free linear form"
    else:
        sub = extended_subcode(dual_spec, k1)
        c1 = grs_code(sub)
        note = ""
    # C1 must sit inside the Hermitian dual of C2
    D = grs_code(dual_spec)
    if _rref_array(F, np.vstack([D.G, c1.G]))[1] != D.k:
        raise SelfCheckFailed("first code is not inside the Hermitian dual")
    return _finish_row(F, c1, grs_code(c2_spec), "hermitian", cap, note)


def build_table5(cap: int = DEFAULT_CAP, rows=None) -> list[GrsTableRow]:
    """Hermitian self-orthogonal (u|u+v) codes over GF(16) and GF(64)."""
    out = []
    layout = [("small", r) for r in TABLE5_SMALL_LAYOUT[:3]]
    layout += [("ext", r) for r in TABLE5_EXTENDED_LAYOUT[:3]]
    layout += [("small", r) for r in TABLE5_SMALL_LAYOUT[3:]]
    layout += [("ext", r) for r in TABLE5_EXTENDED_LAYOUT[3:]]
    for idx, (kind, row) in enumerate(layout):
        if rows is not None and idx not in rows:
            continue
        if kind == "small":
            q, n, k1, k2 = row
            F = _field_of_order(q)
            out.append(_nested_row(F, grs_so_hermitian(F, n, k2), k1, "hermitian", cap))
        else:
            out.append(_extended_row(row[0], row[1], cap))
    return out
