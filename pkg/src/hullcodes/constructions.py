"""Propagation rules, their hull predictions, stock codes and binary families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .code import (
    DEFAULT_CAP,
    LinearCode,
    dual,
    gram_flags,
    griesmer,
    hull_dim,
    intersection_dim,
    is_even_like,
    min_distance,
)
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InternalCrossCheckFailure,
    LengthMismatch,
    NotApplicable,
    NotBinary,
    NotEvenLike,
    NotLCD,
    OddN,
    UnsupportedKind,
)
from .field import Field, field_make
from .matrix import Matrix, _rref_array
from .recipe import ConstructionRecipe


@dataclass(frozen=True)
class HullPrediction:
    """Bracket for a hull dimension; ``exact`` is set when the bracket closes."""

    lower: Optional[int]
    upper: Optional[int]
    exact: Optional[int]
    applicable: bool = True
    reason: str = ""

    def contains(self, h: int) -> bool:
        return self.applicable and self.lower <= h <= self.upper


def _not_applicable(reason: str) -> HullPrediction:
    return HullPrediction(None, None, None, False, reason)


def _same_field(C1: LinearCode, C2: LinearCode) -> Field:
    if C1.field is not C2.field:
        raise FieldMismatch(f"{C1.field!r} vs {C2.field!r}")
    return C1.field


def _recipe(C: LinearCode, fallback: str, **params) -> ConstructionRecipe:
    if C.recipe is not None:
        return C.recipe
    return ConstructionRecipe(fallback, (), params)


def _verify_distance(C: LinearCode, cap: int) -> None:
    """Enumerate when affordable and insist on agreement with the design value."""
    if C.design_distance is None or C.q**C.k > cap:
        return
    d = min_distance(C, cap)
    if d != C.design_distance:
        raise InternalCrossCheckFailure(
            f"{C!r}: enumerated distance {d}, construction promised {C.design_distance}"
        )


def _known_d(C: LinearCode) -> Optional[int]:
    return C.params()[2]


# -- direct sum -----------------------------------------------------------------

def direct_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """{(c1, c2)}, generated by diag(G1, G2)."""
    F = _same_field(C1, C2)
    G = np.zeros((C1.k + C2.k, C1.n + C2.n), dtype=np.int64)
    G[: C1.k, : C1.n] = C1.G
    G[C1.k :, C1.n :] = C2.G
    d1, d2 = _known_d(C1), _known_d(C2)
    design = None
    if C1.k == 0:
        design = d2
    elif C2.k == 0:
        design = d1
    elif d1 is not None and d2 is not None:
        design = min(d1, d2)
    rec = ConstructionRecipe(
        "direct_sum", (_recipe(C1, "file"), _recipe(C2, "file")), {}
    )
    return LinearCode(F, G, recipe=rec, design_distance=design)


def predict_direct_sum_hull(
    C1: LinearCode, C2: LinearCode, flavor: str = "euclidean", verify: bool = True
) -> HullPrediction:
    """Hull dimensions add under the direct sum."""
    _same_field(C1, C2)
    exact = hull_dim(C1, flavor) + hull_dim(C2, flavor)
    if verify:
        actual = hull_dim(direct_sum(C1, C2), flavor)
        if actual != exact:
            raise InternalCrossCheckFailure(f"direct sum hull {actual}, predicted {exact}")
    return HullPrediction(exact, exact, exact)


def direct_sum_criteria(C1: LinearCode, C2: LinearCode, flavor: str = "euclidean") -> dict:
    """SO / LCD / SD of the direct sum: each holds iff it holds for both inputs."""
    f1, f2 = gram_flags(C1, flavor), gram_flags(C2, flavor)
    verdict = {key: f1[key] and f2[key] for key in ("so", "lcd", "sd")}
    actual = gram_flags(direct_sum(C1, C2), flavor)
    if actual != verdict:
        raise InternalCrossCheckFailure(f"direct sum criteria {verdict}, observed {actual}")
    return verdict


# -- (u, u+v) ---------------------------------------------------------------------

def u_uv(C1: LinearCode, C2: LinearCode, cap: int = DEFAULT_CAP) -> LinearCode:
    """{(u, u+v) : u in C1, v in C2}, with distance min(2 d1, d2)."""
    F = _same_field(C1, C2)
    if C1.n != C2.n:
        raise LengthMismatch(f"(u|u+v) needs equal lengths, got {C1.n} and {C2.n}")
    n = C1.n
    G = np.zeros((C1.k + C2.k, 2 * n), dtype=np.int64)
    G[: C1.k, :n] = C1.G
    G[: C1.k, n:] = C1.G
    G[C1.k :, n:] = C2.G
    d1, d2 = _known_d(C1), _known_d(C2)
    design = None
    if C1.k == 0:
        design = d2
    elif C2.k == 0:
        design = None if d1 is None else 2 * d1
    elif d1 is not None and d2 is not None:
        design = min(2 * d1, d2)
    rec = ConstructionRecipe("u_uv", (_recipe(C1, "file"), _recipe(C2, "file")), {})
    C = LinearCode(F, G, recipe=rec, design_distance=design)
    _verify_distance(C, cap)
    return C


def predict_uuv_hull(C1: LinearCode, C2: LinearCode, flavor: str = "euclidean") -> HullPrediction:
    """Bracket the hull of (u|u+v) from dim(C1 ∩ C2^⊥), l2, k1 and k2.

    Valid in characteristic 2 or when C1 is self-orthogonal; exact when C2 is.
    """
    F = _same_field(C1, C2)
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths {C1.n} and {C2.n} differ")
    if F.p != 2 and not gram_flags(C1, flavor)["so"]:
        return _not_applicable("needs characteristic 2 or a self-orthogonal first code")
    m = intersection_dim(C1, dual(C2, flavor))
    l2 = hull_dim(C2, flavor)
    lower = max(0, 2 * m + l2 - C1.k)
    upper = 2 * m + C2.k - C1.k
    exact = upper if (l2 == C2.k or lower == upper) else None
    if exact is not None:
        lower = exact
    return HullPrediction(lower, upper, exact)


def uuv_criteria(C1: LinearCode, C2: LinearCode, flavor: str = "euclidean") -> dict:
    """SO / LCD / SD of (u|u+v) from the relative position of C1 and C2^⊥."""
    F = _same_field(C1, C2)
    so1, so2 = gram_flags(C1, flavor)["so"], gram_flags(C2, flavor)["so"]
    if not ((F.p == 2 and so2) or (so1 and so2)):
        raise NotApplicable(
            "needs a self-orthogonal second code, plus characteristic 2 or a self-orthogonal first code"
        )
    D2 = dual(C2, flavor)
    m = intersection_dim(C1, D2)
    verdict = {
        "so": m == C1.k,
        "lcd": 2 * m == C1.k - C2.k,
        "sd": C1 == D2,
    }
    actual = gram_flags(u_uv(C1, C2, cap=0), flavor)
    if actual != verdict:
        raise InternalCrossCheckFailure(f"(u|u+v) criteria {verdict}, observed {actual}")
    return verdict


def uuv_repetition_binary(C1: LinearCode, cap: int = DEFAULT_CAP) -> tuple[LinearCode, int]:
    """(u|u+v) with the length-n repetition code; hull is k1 (n odd) or k1+1 (n even)."""
    if C1.q != 2:
        raise NotBinary("the repetition rule is stated for binary codes")
    if not is_even_like(C1):
        raise NotEvenLike("the first code must be even-like")
    C = u_uv(C1, repetition(C1.field, C1.n), cap)
    C.recipe = ConstructionRecipe("uuv_repetition", (_recipe(C1, "file"),), {})
    predicted = C1.k + (1 if C1.n % 2 == 0 else 0)
    if hull_dim(C) != predicted:
        raise InternalCrossCheckFailure(f"hull {hull_dim(C)}, expected {predicted}")
    return C, predicted


def uuv_parity(C1: LinearCode) -> str:
    """Parity class of (u|u+v) with the repetition code: even-like iff n is even."""
    if C1.q != 2:
        raise NotBinary("parity classes are defined for binary codes")
    verdict = "even_like" if C1.n % 2 == 0 else "odd_like"
    C = u_uv(C1, repetition(C1.field, C1.n), cap=0)
    if ("even_like" if is_even_like(C) else "odd_like") != verdict:
        raise InternalCrossCheckFailure("parity of the (u|u+v) code disagrees with n")
    return verdict


def direct_sum_parity(C1: LinearCode, C2: LinearCode) -> str:
    """Parity class of C1 ⊕ C2; the odd + odd case is settled by testing the sum."""
    if C1.q != 2 or C2.q != 2:
        raise NotBinary("parity classes are defined for binary codes")
    e1, e2 = is_even_like(C1), is_even_like(C2)
    observed = "even_like" if is_even_like(direct_sum(C1, C2)) else "odd_like"
    if e1 and e2:
        expected = "even_like"
    elif e1 != e2:
        expected = "odd_like"
    else:
        return observed
    if observed != expected:
        raise InternalCrossCheckFailure(f"direct sum parity {observed}, expected {expected}")
    return expected


# -- matrix-product codes ------------------------------------------------------------

def matrix_product(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """[C_1, ..., C_m] · A: block row i is (a_i1 G_i | ... | a_is G_i)."""
    codes = list(codes)
    F = codes[0].field
    for C in codes:
        if C.field is not F or A.field is not F:
            raise FieldMismatch("all codes and A must share one field")
        if C.n != codes[0].n:
            raise LengthMismatch("matrix-product inputs need a common length")
    m, s = A.shape
    if m != len(codes):
        raise DimensionMismatch(f"A has {m} rows for {len(codes)} codes")
    blocks = []
    for i, C in enumerate(codes):
        blocks.append(np.hstack([F.mul(C.G, int(A.array[i, j])) for j in range(s)]))
    G = np.vstack(blocks) if blocks else np.zeros((0, codes[0].n * s), dtype=np.int64)
    rec = ConstructionRecipe(
        "matrix_product", tuple(_recipe(C, "file") for C in codes), {"A": A.tolist()}
    )
    out = LinearCode(F, G, recipe=rec)
    if _rref_array(F, A.array)[1] == m and out.k != sum(C.k for C in codes):
        raise InternalCrossCheckFailure("full-rank A must preserve total dimension")
    return out


# -- stock codes ------------------------------------------------------------------------

def repetition(F: Field, n: int) -> LinearCode:
    if n < 1:
        raise ValueError("repetition length must be positive")
    return LinearCode(
        F, np.ones((1, n), dtype=np.int64),
        recipe=ConstructionRecipe("repetition", (), {"n": n, "field": F.spec_string()}),
        design_distance=n,
    )


def even_weight(n: int) -> LinearCode:
    """Binary [n, n-1, 2] code with rows e_i + e_n."""
    if n < 2:
        raise ValueError("even-weight code needs n >= 2")
    G = np.zeros((n - 1, n), dtype=np.int64)
    G[np.arange(n - 1), np.arange(n - 1)] = 1
    G[:, n - 1] = 1
    return LinearCode(
        field_make(2), G,
        recipe=ConstructionRecipe("even_weight", (), {"n": n}),
        design_distance=2,
    )


def simplex(t: int) -> LinearCode:
    """Binary [2^t - 1, t, 2^(t-1)] code; columns are 1..2^t - 1 in binary."""
    if t < 1:
        raise ValueError("simplex code needs t >= 1")
    cols = np.arange(1, 2**t)
    G = (cols[None, :] >> np.arange(t)[:, None]) & 1
    return LinearCode(
        field_make(2), G,
        recipe=ConstructionRecipe("simplex", (), {"t": t}),
        design_distance=2 ** (t - 1),
    )


def stock_code(kind: str, F: Optional[Field] = None, size: int = 1) -> LinearCode:
    """repetition(n) over any field; simplex(t) and even_weight(n) are binary."""
    if kind == "repetition":
        return repetition(F or field_make(2), size)
    if F is not None and F.q != 2:
        raise UnsupportedKind(f"{kind} is only provided over GF(2)")
    if kind == "simplex":
        return simplex(size)
    if kind == "even_weight":
        return even_weight(size)
    raise UnsupportedKind(f"unknown stock code {kind!r}")


# -- binary families --------------------------------------------------------------------

def family_binary_sd(n: int, cap: int = DEFAULT_CAP) -> LinearCode:
    """[2n, n, min(4, n)]_2: self-dual for even n, almost self-dual for odd n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    C, h = uuv_repetition_binary(even_weight(n), cap)
    want = n if n % 2 == 0 else n - 1
    if h != want or C.design_distance != min(4, n):
        raise InternalCrossCheckFailure(f"family member {C!r} has hull {h}")
    return C


def family_binary_so_tower(n: int, t: int, cap: int = DEFAULT_CAP) -> LinearCode:
    """[2^(t+1) n, n + t, 2^(t+2)]_2 even-like self-orthogonal code."""
    if n % 2 or n < 4:
        raise OddN("the tower starts from an even n >= 4")
    if t < 0:
        raise ValueError("t must be non-negative")
    C = family_binary_sd(n, cap)
    for _ in range(t):
        if not is_even_like(C):
            raise InternalCrossCheckFailure("tower level lost even-likeness")
        C, _h = uuv_repetition_binary(C, cap)
    if not (is_even_like(C) and gram_flags(C)["so"]):
        raise InternalCrossCheckFailure("tower output is not even-like self-orthogonal")
    if C.params() != (2 ** (t + 1) * n, n + t, 2 ** (t + 2)):
        raise InternalCrossCheckFailure(f"tower output {C.params()}")
    return C


def family_binary_so_rm(t: int, cap: int = DEFAULT_CAP) -> LinearCode:
    """[2^(t+1), t + 1, 2^t]_2 even-like self-orthogonal code, grown from [4, 2, 2]_2."""
    if t < 1:
        raise ValueError("t must be at least 1")
    C = family_binary_sd(2, cap)
    for _ in range(t - 1):
        C, _h = uuv_repetition_binary(C, cap)
    if not (is_even_like(C) and gram_flags(C)["so"]):
        raise InternalCrossCheckFailure("output is not even-like self-orthogonal")
    if C.params() != (2 ** (t + 1), t + 1, 2**t):
        raise InternalCrossCheckFailure(f"output {C.params()}")
    return C


def family_binary_almost_so_simplex(t: int, cap: int = DEFAULT_CAP) -> LinearCode:
    """[2^(t+1) - 2, t + 1, 2^t - 1]_2 code from a simplex code; meets Griesmer.

    For t >= 2 the result is odd-like and almost self-orthogonal.  At t = 1
    the simplex code [1, 1, 1] is odd-like, the result is the full space
    [2, 2, 1]_2 and only the parameters and the Griesmer equality hold.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    S = simplex(t)
    if t == 1:
        C = u_uv(S, repetition(S.field, S.n), cap)
    else:
        C, h = uuv_repetition_binary(S, cap)
        if h != C.k - 1 or is_even_like(C):
            raise InternalCrossCheckFailure("expected an odd-like almost self-orthogonal code")
    n, k, d = C.params()
    if (n, k, d) != (2 ** (t + 1) - 2, t + 1, 2**t - 1) or griesmer(2, k, d) != n:
        raise InternalCrossCheckFailure(f"output {C.params()} misses the Griesmer bound")
    return C


# -- LCD combination ---------------------------------------------------------------------

def lcd_bound_combine(p1: Sequence[int], p2: Sequence[int]) -> tuple[int, int, int]:
    """Parameters of the direct sum of two LCD codes, which is again LCD."""
    (n1, k1, d1), (n2, k2, d2) = p1, p2
    return n1 + n2, k1 + k2, min(d1, d2)


def lcd_combine_codes(C1: LinearCode, C2: LinearCode, flavor: str = "euclidean") -> LinearCode:
    """Direct sum of two verified LCD codes, certified LCD."""
    for C in (C1, C2):
        if not gram_flags(C, flavor)["lcd"]:
            raise NotLCD(f"{C!r} is not LCD ({flavor})")
    out = direct_sum(C1, C2)
    if not gram_flags(out, flavor)["lcd"]:
        raise InternalCrossCheckFailure("direct sum of LCD codes is not LCD")
    return out
