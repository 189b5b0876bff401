"""Formally self-dual codes (I_n | f(A)) from Toeplitz matrices, and their direct sums."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .code import DEFAULT_CAP, LinearCode, apply_permutation, gram_flags, is_fsd, min_distance
from .errors import BudgetZero, HalfLengthMismatch, InternalCrossCheckFailure, SeedMissing
from .field import Field, field_from_order, parse_field
from .matrix import (
    Matrix,
    ToeplitzSpec,
    exchange_matrix,
    mat_mul,
    poly_eval_matrix,
    toeplitz,
    transpose,
)
from .recipe import ConstructionRecipe


@dataclass
class FsdSeed:
    """A [2n, n] code generated by (I_n | f(A)) with A Toeplitz, plus its certificate."""

    field: Field
    n: int
    poly: tuple[int, ...]
    toeplitz: ToeplitzSpec
    code: LinearCode
    certified: dict = dc_field(default_factory=dict)

    @property
    def block(self) -> np.ndarray:
        """f(A), the right half of the systematic generator."""
        return self.code.G[:, self.n :]

    def to_dict(self) -> dict:
        return {
            "q": self.field.q,
            "field": self.field.spec_string(),
            "n": self.n,
            "f": list(self.poly),
            "t": self.toeplitz.t,
            "a": list(self.toeplitz.a),
            "b": list(self.toeplitz.b),
            "certified": self.certified,
        }

    def sort_key(self):
        d = self.certified.get("distance") or 0
        return (-d, self.toeplitz.t, self.toeplitz.a, self.toeplitz.b, self.poly)


def _flavors(F: Field) -> list[str]:
    return ["euclidean", "hermitian"] if F.sub_q is not None else ["euclidean"]


def certify(code: LinearCode, cap: int = DEFAULT_CAP) -> dict:
    """FSD by weight-distribution comparison, LCD flags and exact distance."""
    out = {"fsd": is_fsd(code, "euclidean", cap)}
    for flavor in _flavors(code.field):
        out["lcd_" + flavor[0]] = gram_flags(code, flavor)["lcd"]
    out["distance"] = min_distance(code, cap) if code.k else None
    return out


def fsd_from_toeplitz(
    F: Field, f: Sequence[int], spec: ToeplitzSpec, cap: int = DEFAULT_CAP
) -> FsdSeed:
    """The code (I_n | f(A)), with f(A)^T = J f(A) J checked and FSD certified."""
    n = spec.n
    A = toeplitz(F, spec, n)
    B = poly_eval_matrix(f, A)
    J = exchange_matrix(F, n)
    if transpose(B) != mat_mul(mat_mul(J, B), J):
        raise InternalCrossCheckFailure("f(A)^T differs from J f(A) J for a Toeplitz A")
    G = np.hstack([np.eye(n, dtype=np.int64), B.array])
    params = {"field": F.spec_string(), "f": list(map(int, f)), "t": spec.t,
              "a": list(spec.a), "b": list(spec.b)}
    code = LinearCode(F, G, recipe=ConstructionRecipe("toeplitz_fsd", (), params))
    return FsdSeed(F, n, tuple(int(c) for c in f), spec, code, certify(code, cap))


def doubling_permutation(n: int, copies: int = 2) -> np.ndarray:
    """Column order taking diag((I|B_1), ..., (I|B_m)) to (I_mn | diag(B_1, ..., B_m))."""
    idx = np.arange(2 * n * copies).reshape(copies, 2, n)
    return np.concatenate([idx[:, 0, :].ravel(), idx[:, 1, :].ravel()])


def fsd_stack(seeds: Sequence[FsdSeed], cap: int = DEFAULT_CAP) -> LinearCode:
    """Direct sum of the seed codes, permuted to the form (I_mn | diag(f_i(A_i)))."""
    if not seeds:
        raise SeedMissing("need at least one seed")
    F, n = seeds[0].field, seeds[0].n
    for s in seeds:
        if s.n != n:
            raise HalfLengthMismatch(f"half-lengths {n} and {s.n} differ")
        if s.field is not F:
            raise ValueError("seeds must share one field")
    m = len(seeds)
    G = np.zeros((m * n, 2 * m * n), dtype=np.int64)
    for i, s in enumerate(seeds):
        G[i * n : (i + 1) * n, 2 * i * n : 2 * (i + 1) * n] = s.code.G
    direct = LinearCode(
        F, G,
        recipe=ConstructionRecipe("fsd_double", tuple(s.code.recipe for s in seeds), {}),
    )
    out = apply_permutation(direct, doubling_permutation(n, m))
    ds = [s.certified.get("distance") for s in seeds]
    if None not in ds:
        out.design_distance = min(ds)
    return out


def fsd_double(seed1: FsdSeed, seed2: FsdSeed, cap: int = DEFAULT_CAP) -> LinearCode:
    """[4n, 2n, min(d1, d2)] FSD code; LCD when both seeds are (per flavor)."""
    return fsd_stack([seed1, seed2], cap)


def verify_stack(code: LinearCode, seeds: Sequence[FsdSeed], cap: int = DEFAULT_CAP) -> dict:
    """Certify FSD, inherited LCD flags and distance min(d_i) on a stacked code."""
    cert = certify(code, cap)
    if not cert["fsd"]:
        raise InternalCrossCheckFailure("stacked Toeplitz code is not formally self-dual")
    for key in [k for k in cert if k.startswith("lcd_")]:
        if all(s.certified.get(key) for s in seeds) and not cert[key]:
            raise InternalCrossCheckFailure(f"{key} lost in the direct sum")
    if cert["distance"] != min(s.certified["distance"] for s in seeds):
        raise InternalCrossCheckFailure("distance of the stacked code is not min(d_i)")
    return cert


# -- search -------------------------------------------------------------------------

def _candidates(F: Field, n: int, fdeg: int):
    q = F.q
    for t in range(q):
        for ab in itertools.product(range(q), repeat=2 * (n - 1)):
            spec = ToeplitzSpec(t, ab[: n - 1], ab[n - 1 :])
            for f in itertools.product(range(q), repeat=fdeg + 1):
                if any(f):
                    yield tuple(f), spec


def search_space_size(F: Field, n: int, fdeg: Optional[int] = None) -> int:
    fdeg = min(n - 1, 2) if fdeg is None else fdeg
    return F.q ** (2 * n - 1) * (F.q ** (fdeg + 1) - 1)


def fsd_search(
    F: Field,
    n: int,
    flavor: str = "euclidean",
    budget: int = 10_000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
    fdeg: Optional[int] = None,
) -> list[FsdSeed]:
    """LCD seeds (I_n | f(A)), best distance first.

    The whole (f, A) space is scanned when it fits in ``budget`` trials,
    otherwise ``budget`` random candidates are drawn from a seeded generator.
    """
    if budget < 0:
        raise BudgetZero("budget must be non-negative")
    if budget == 0:
        return []
    if F.q**n > cap:
        raise ValueError(f"q^n = {F.q ** n} exceeds the enumeration cap")
    fdeg = min(n - 1, 2) if fdeg is None else fdeg
    q = F.q
    if search_space_size(F, n, fdeg) <= budget:
        pool = list(_candidates(F, n, fdeg))
    else:
        rng = np.random.default_rng(seed)
        pool, seen = [], set()
        for _ in range(budget):
            t = int(rng.integers(q))
            ab = tuple(int(x) for x in rng.integers(q, size=2 * (n - 1)))
            f = tuple(int(x) for x in rng.integers(q, size=fdeg + 1))
            if not any(f):
                f = f[:-1] + (1,)
            key = (f, t, ab)
            if key not in seen:
                seen.add(key)
                pool.append((f, ToeplitzSpec(t, ab[: n - 1], ab[n - 1 :])))
    found = []
    key = "lcd_" + flavor[0]
    for f, spec in pool:
        A = toeplitz(F, spec, n)
        G = np.hstack([np.eye(n, dtype=np.int64), poly_eval_matrix(f, A).array])
        if not gram_flags(LinearCode(F, G), flavor)["lcd"]:
            continue
        s = fsd_from_toeplitz(F, f, spec, cap)
        if s.certified.get(key):
            found.append(s)
    found.sort(key=FsdSeed.sort_key)
    return found


# -- families ------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyTarget:
    """A [4sn, 2sn, d] FSD LCD family built by stacking a [2n, n, d] seed."""

    name: str
    q: int
    seed_params: tuple[int, int, int]
    flavor: str


FAMILY_TARGETS = [
    FamilyTarget("binary euclidean, seed [50,25,9]", 2, (50, 25, 9), "euclidean"),
    FamilyTarget("binary euclidean, seed [22,11,5]", 2, (22, 11, 5), "euclidean"),
    FamilyTarget("binary euclidean, seed [40,20,8]", 2, (40, 20, 8), "euclidean"),
    FamilyTarget("ternary euclidean, seed [16,8,5]", 3, (16, 8, 5), "euclidean"),
    FamilyTarget("quaternary hermitian, seed [24,12,8]", 4, (24, 12, 8), "hermitian"),
    FamilyTarget("quaternary hermitian, seed [16,8,6]", 4, (16, 8, 6), "hermitian"),
    FamilyTarget("quaternary hermitian, seed [20,10,7]", 4, (20, 10, 7), "hermitian"),
]


def family_fsd_lcd(
    seeds: Sequence[FsdSeed],
    s_values: Sequence[int] = (1, 2, 3),
    flavor: str = "euclidean",
    cap: int = DEFAULT_CAP,
) -> list[dict]:
    """Certify the [4sn, 2sn, min d] FSD LCD members built from one or two seeds."""
    seeds = [s for s in seeds if s is not None]
    if not seeds:
        raise SeedMissing("the family is conditional on a seed; none was supplied")
    pair = seeds if len(seeds) == 2 else [seeds[0], seeds[0]]
    key = "lcd_" + flavor[0]
    for s in pair:
        if not s.certified.get(key):
            raise ValueError(f"seed is not {flavor} LCD")
    out = []
    for s in s_values:
        stack = list(pair) * s
        code = fsd_stack(stack, cap)
        entry = {"s": s, "params": [code.n, code.k, code.design_distance], "certified": None}
        if code.q**code.k <= cap:
            entry["certified"] = verify_stack(code, stack, cap)
        else:
            entry["reason"] = "enumeration over budget; parameters follow from the seeds"
            entry["lcd"] = gram_flags(code, flavor)["lcd"]
        out.append(entry)
    return out


def family_report(target: FamilyTarget, seed: Optional[FsdSeed], s_values=(1, 2, 3), cap=DEFAULT_CAP) -> dict:
    """Family status for a target; conditional when no matching seed is supplied."""
    n2, n, d = target.seed_params
    doc = {
        "target": target.name,
        "q": target.q,
        "flavor": target.flavor,
        "members": [[2 * n2 * s, n2 * s, d] for s in s_values],
    }
    if seed is None:
        doc["status"] = "conditional on a seed with parameters " + str(list(target.seed_params))
        return doc
    got = (seed.code.n, seed.code.k, seed.certified.get("distance"))
    if got != target.seed_params:
        doc["status"] = f"supplied seed has parameters {list(got)}"
        return doc
    doc["status"] = "certified"
    doc["certificates"] = family_fsd_lcd([seed], s_values, target.flavor, cap)
    return doc


# -- seed files ---------------------------------------------------------------------

def seed_from_dict(d: dict, cap: int = DEFAULT_CAP) -> FsdSeed:
    F = parse_field(str(d["field"])) if "field" in d else field_from_order(int(d["q"]))
    spec = ToeplitzSpec(int(d["t"]), tuple(d["a"]), tuple(d["b"]))
    if "n" in d and int(d["n"]) != spec.n:
        raise HalfLengthMismatch(f"seed says n={d['n']} but the Toeplitz data has size {spec.n}")
    return fsd_from_toeplitz(F, d["f"], spec, cap)


def load_seed(path, cap: int = DEFAULT_CAP) -> FsdSeed:
    return seed_from_dict(json.loads(Path(path).read_text()), cap)


def save_seed(seed: FsdSeed, path) -> None:
    Path(path).write_text(json.dumps(seed.to_dict(), sort_keys=True) + "\n")
