"""Linear codes and single-code analyses: duals, hulls, distances, classification."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

import numpy as np

from . import _enumeration as enum
from .errors import (
    BudgetExceeded,
    DistanceUnknown,
    FieldMismatch,
    InternalCrossCheckFailure,
    LengthMismatch,
    NoHermitianStructure,
    NotAPermutation,
    NotBinary,
    ZeroDimensional,
)
from .field import Field
from .matrix import Matrix, _kernel_from_rref, _matmul_arrays, _rref_array

DEFAULT_CAP = 1 << 26
FLAVORS = ("euclidean", "hermitian")


class LinearCode:
    """An [n, k] code over a field, held by its RREF generator matrix.

    Two codes are equal exactly when their canonical generators are equal.
    ``design_distance`` is a distance claimed by the construction that built
    the code; exact distances are computed on demand and cached.
    """

    def __init__(self, field: Field, generator, *, recipe=None, design_distance=None):
        if isinstance(generator, Matrix):
            if generator.field is not field:
                raise FieldMismatch(f"generator over {generator.field!r}, code over {field!r}")
            a = generator.array
        else:
            a = np.asarray(generator, dtype=np.int64)
            if a.ndim == 1:
                a = a.reshape(0, a.size) if a.size == 0 else a.reshape(1, -1)
            if a.size and (a.min() < 0 or a.max() >= field.q):
                raise ValueError(f"entries must lie in [0, {field.q})")
        R, r, piv = _rref_array(field, a)
        self.field = field
        self.n = a.shape[1]
        self.k = r
        self.gen = Matrix._wrap(field, R[:r])
        self.pivots = tuple(piv)
        self.recipe = recipe
        self.design_distance = design_distance
        self._cache: dict[str, Any] = {}

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def G(self) -> np.ndarray:
        return self.gen.array

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field is other.field and self.n == other.n and self.gen == other.gen

    def __hash__(self):
        return hash((self.n, self.gen))

    def __repr__(self):
        d = self._cache.get("d")
        dtxt = f",{d}" if d is not None else ""
        return f"LinearCode([{self.n},{self.k}{dtxt}]_{self.q})"

    def params(self) -> tuple[int, int, Optional[int]]:
        """(n, k, d) with d exact if already computed, else the design value."""
        return self.n, self.k, self._cache.get("d", self.design_distance)

    def with_recipe(self, recipe) -> "LinearCode":
        self.recipe = recipe
        return self

    # conveniences delegating to the module functions
    def dual(self, flavor: str = "euclidean") -> "LinearCode":
        return dual(self, flavor)

    def hull_dim(self, flavor: str = "euclidean") -> int:
        return hull_dim(self, flavor)

    def min_distance(self, cap: int = DEFAULT_CAP) -> int:
        return min_distance(self, cap)


def code_from_generator(F: Field, G) -> LinearCode:
    return LinearCode(F, G)


def _check_flavor(C: LinearCode, flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor == "hermitian" and C.field.sub_q is None:
        raise NoHermitianStructure(f"{C.field!r} has no Hermitian inner product")


def _flavored(C: LinearCode, flavor: str) -> np.ndarray:
    """Generator as it enters the right-hand side of the inner product."""
    return C.G if flavor == "euclidean" else C.field.conj(C.G)


def _compatible(C: LinearCode, D: LinearCode) -> None:
    if C.field is not D.field:
        raise FieldMismatch(f"{C.field!r} vs {D.field!r}")
    if C.n != D.n:
        raise LengthMismatch(f"lengths {C.n} and {D.n} differ")


# -- duals and intersections ---------------------------------------------------

def dual(C: LinearCode, flavor: str = "euclidean") -> LinearCode:
    _check_flavor(C, flavor)
    key = "dual_" + flavor
    if key not in C._cache:
        a = _flavored(C, flavor)
        R, r, piv = _rref_array(C.field, a)
        K = _kernel_from_rref(C.field, R, r, piv, C.n)
        D = LinearCode(C.field, K)
        D._cache[key] = C
        C._cache[key] = D
    return C._cache[key]


def dual_euclidean(C: LinearCode) -> LinearCode:
    return dual(C, "euclidean")


def dual_hermitian(C: LinearCode) -> LinearCode:
    return dual(C, "hermitian")


def intersection_dim(C: LinearCode, D: LinearCode) -> int:
    """dim(C ∩ D) = k_C + k_D - rank of the stacked generators."""
    _compatible(C, D)
    stacked = np.vstack([C.G, D.G])
    return C.k + D.k - _rref_array(C.field, stacked)[1]


def intersect(C: LinearCode, D: LinearCode) -> LinearCode:
    """C ∩ D as the common kernel of both parity-check matrices."""
    _compatible(C, D)
    stacked = np.vstack([dual(C).G, dual(D).G])
    R, r, piv = _rref_array(C.field, stacked)
    out = LinearCode(C.field, _kernel_from_rref(C.field, R, r, piv, C.n))
    expected = intersection_dim(C, D)
    if out.k != expected:
        raise InternalCrossCheckFailure(
            f"intersection dimension {out.k} via kernels, {expected} via row spaces"
        )
    return out


def gram(C: LinearCode, D: Optional[LinearCode] = None, flavor: str = "euclidean") -> Matrix:
    """G_C G_D^T (or G_C G_D^dagger)."""
    D = C if D is None else D
    _compatible(C, D)
    _check_flavor(C, flavor)
    return Matrix._wrap(C.field, _matmul_arrays(C.field, C.G, _flavored(D, flavor).T))


def cross_rank(C1: LinearCode, C2: LinearCode, flavor: str = "euclidean") -> int:
    """rank(G1 G2^T) or rank(G1 G2^dagger), checked against k1 - dim(C1 ∩ C2^⊥)."""
    r = _rref_array(C1.field, gram(C1, C2, flavor).array)[1]
    other = C1.k - intersection_dim(C1, dual(C2, flavor))
    if r != other:
        raise InternalCrossCheckFailure(f"cross rank {r} but k1 - dim(C1 ∩ C2^⊥) = {other}")
    return r


def hull_dim(C: LinearCode, flavor: str = "euclidean") -> int:
    """k - rank of the Gram matrix, cross-checked against dim(C ∩ C^⊥)."""
    _check_flavor(C, flavor)
    key = "hull_" + flavor
    if key not in C._cache:
        if C.k == 0:
            C._cache[key] = 0
            return 0
        via_rank = C.k - _rref_array(C.field, gram(C, C, flavor).array)[1]
        via_meet = intersection_dim(C, dual(C, flavor))
        if via_rank != via_meet:
            raise InternalCrossCheckFailure(
                f"hull dimension {via_rank} from the Gram rank, {via_meet} from the intersection"
            )
        C._cache[key] = via_rank
    return C._cache[key]


def hull(C: LinearCode, flavor: str = "euclidean") -> LinearCode:
    return intersect(C, dual(C, flavor))


# -- distances -----------------------------------------------------------------

def _enumeration_size(C: LinearCode) -> int:
    return C.q**C.k


def weight_distribution(C: LinearCode, cap: int = DEFAULT_CAP) -> list[int]:
    """[A_0, ..., A_n].

    Enumerates C when q^k fits the cap, otherwise enumerates the dual and
    applies the MacWilliams transform when q^(n-k) fits.
    """
    if "wd" in C._cache:
        return C._cache["wd"]
    if _enumeration_size(C) <= cap:
        wd = enum.weight_counts(C.field, C.G)
    elif C.q ** (C.n - C.k) <= cap:
        D = dual(C)
        wd = enum.macwilliams(enum.weight_counts(C.field, D.G), C.q)
        if wd[0] != 1 or sum(wd) != C.q**C.k:
            raise InternalCrossCheckFailure("MacWilliams transform lost normalisation")
    else:
        raise BudgetExceeded(min(_enumeration_size(C), C.q ** (C.n - C.k)), cap)
    C._cache["wd"] = wd
    return wd


def min_distance(C: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum distance by enumeration under the codeword budget."""
    if C.k == 0:
        raise ZeroDimensional("the zero code has no minimum distance")
    if "d" not in C._cache:
        if "wd" in C._cache or _enumeration_size(C) > cap:
            wd = weight_distribution(C, cap)
            C._cache["d"] = next(w for w in range(1, C.n + 1) if wd[w])
        else:
            C._cache["d"] = enum.min_weight(C.field, C.G)
    return C._cache["d"]


def known_distance(C: LinearCode) -> Optional[int]:
    return C._cache.get("d")


def is_fsd(C: LinearCode, flavor: str = "euclidean", cap: int = DEFAULT_CAP) -> bool:
    _check_flavor(C, flavor)
    if C.n != 2 * C.k:
        return False
    D = dual(C, flavor)
    if D == C:
        return True
    return weight_distribution(C, cap) == weight_distribution(D, cap)


def is_even_like(C: LinearCode) -> bool:
    if C.q != 2:
        raise NotBinary("even-like is defined here for binary codes only")
    return bool((C.G.sum(axis=1) % 2 == 0).all())


def griesmer(q: int, k: int, d: int) -> int:
    """Smallest length the Griesmer bound allows for an [n, k, d]_q code."""
    if k < 1 or d < 1:
        raise ValueError("griesmer needs k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


def meets_griesmer(C: LinearCode, cap: int = DEFAULT_CAP) -> bool:
    try:
        d = min_distance(C, cap)
    except BudgetExceeded as exc:
        raise DistanceUnknown(str(exc)) from exc
    return C.n == griesmer(C.q, C.k, d)


def apply_permutation(C: LinearCode, perm) -> LinearCode:
    """Code generated by G with columns reordered: new column j is old column perm[j]."""
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (C.n,) or not np.array_equal(np.sort(perm), np.arange(C.n)):
        raise NotAPermutation(f"not a permutation of {C.n} columns")
    out = LinearCode(C.field, C.G[:, perm], recipe=C.recipe, design_distance=C.design_distance)
    for flavor in FLAVORS:
        if flavor == "hermitian" and C.field.sub_q is None:
            continue
        if hull_dim(out, flavor) != hull_dim(C, flavor):
            raise InternalCrossCheckFailure("hull dimension changed under a coordinate permutation")
    if "d" in C._cache:
        out._cache["d"] = C._cache["d"]
    return out


# -- classification ------------------------------------------------------------

@dataclass
class CodeReport:
    """Classification certificate; ``None`` entries come with a reason."""

    q: int
    n: int
    k: int
    d: Optional[int]
    distance_mode: str
    hull_e: Optional[int]
    hull_h: Optional[int]
    flags: dict[str, Optional[bool]]
    griesmer_bound: Optional[int]
    griesmer_meets: Optional[bool]
    reasons: dict[str, str] = dc_field(default_factory=dict)

    @property
    def params(self) -> tuple[int, int, int, Optional[int]]:
        return self.q, self.n, self.k, self.d


def _flavor_flags(C: LinearCode, flavor: str, cap: int, flags, reasons) -> int:
    s = "e" if flavor == "euclidean" else "h"
    h = hull_dim(C, flavor)
    g = gram(C, C, flavor).array
    lcd = _rref_array(C.field, g)[1] == C.k
    so = not g.any()
    if lcd != (h == 0) or so != (h == C.k):
        raise InternalCrossCheckFailure("Gram-matrix criteria disagree with the hull dimension")
    flags[f"lcd_{s}"] = lcd
    flags[f"so_{s}"] = so
    flags[f"sd_{s}"] = so and C.n == 2 * C.k
    if s == "e":
        flags["almost_so_e"] = C.k >= 1 and h == C.k - 1
        flags["almost_sd_e"] = flags["almost_so_e"] and C.n == 2 * C.k
    if C.n != 2 * C.k:
        flags[f"fsd_{s}"] = False
    else:
        try:
            flags[f"fsd_{s}"] = is_fsd(C, flavor, cap)
        except BudgetExceeded as exc:
            flags[f"fsd_{s}"] = None
            reasons[f"fsd_{s}"] = f"weight distribution over budget: {exc}"
    return h


def classify(C: LinearCode, cap: int = DEFAULT_CAP) -> CodeReport:
    """Everything computable about C within the codeword budget."""
    flags: dict[str, Optional[bool]] = {}
    reasons: dict[str, str] = {}
    hull_e = _flavor_flags(C, "euclidean", cap, flags, reasons)
    hull_h = None
    if C.field.sub_q is not None:
        hull_h = _flavor_flags(C, "hermitian", cap, flags, reasons)
    else:
        for key in ("lcd_h", "so_h", "sd_h", "fsd_h"):
            flags[key] = None
            reasons[key] = "field has odd extension degree"
        reasons["hull_h"] = "field has odd extension degree"

    if C.q == 2:
        flags["even_like"] = is_even_like(C)
        flags["odd_like"] = not flags["even_like"]
    else:
        flags["even_like"] = flags["odd_like"] = None
        reasons["even_like"] = reasons["odd_like"] = "defined for binary codes only"

    d = None
    mode = "unknown"
    if C.k == 0:
        reasons["d"] = "zero-dimensional code"
    else:
        try:
            d = min_distance(C, cap)
            mode = "exact-enumerated"
        except BudgetExceeded as exc:
            if C.design_distance is not None:
                d = C.design_distance
                mode = "design-value"
                reasons["d"] = f"design value; enumeration over budget: {exc}"
            else:
                reasons["d"] = f"enumeration over budget: {exc}"

    bound = meets = None
    if d is None:
        reasons["griesmer"] = "distance unknown"
    else:
        bound = griesmer(C.q, C.k, d)
        if mode == "exact-enumerated":
            meets = C.n == bound
        else:
            reasons["griesmer_meets"] = "needs an exact distance"

    return CodeReport(C.q, C.n, C.k, d, mode, hull_e, hull_h, flags, bound, meets, reasons)


def gram_flags(C: LinearCode, flavor: str = "euclidean") -> dict[str, bool]:
    """LCD / SO / SD verdicts from the Gram matrix alone (no enumeration)."""
    g = gram(C, C, flavor).array
    lcd = _rref_array(C.field, g)[1] == C.k
    so = not g.any()
    return {"lcd": lcd, "so": so, "sd": so and C.n == 2 * C.k}
