import numpy as np
import pytest
from hypothesis import given, strategies as st

from hullcodes.code import (
    LinearCode,
    apply_permutation,
    classify,
    code_from_generator,
    cross_rank,
    dual,
    dual_euclidean,
    dual_hermitian,
    gram,
    gram_flags,
    griesmer,
    hull,
    hull_dim,
    intersect,
    intersection_dim,
    is_even_like,
    is_fsd,
    meets_griesmer,
    min_distance,
    weight_distribution,
)
from hullcodes.constructions import even_weight, family_binary_sd, repetition, simplex
from hullcodes.errors import BudgetExceeded, NoHermitianStructure, NotAPermutation, NotBinary
from hullcodes.field import field_from_order, field_make
from hullcodes.matrix import Matrix, rank
from oracles import codewords, dual_space
from oracles import min_distance as brute_min_distance
from oracles import weight_distribution as brute_wd

from conftest import G1


def random_code(F, n, k, rng):
    return LinearCode(F, rng.integers(F.q, size=(k, n)))


def test_canonical_form(gf4):
    C = code_from_generator(gf4, G1)
    assert (C.n, C.k) == (6, 2)
    F2 = field_make(2)
    full = LinearCode(F2, np.eye(5, dtype=np.int64))
    assert (full.n, full.k) == (5, 5)
    swapped = LinearCode(gf4, [G1[1], G1[0]])
    scaled = LinearCode(gf4, [gf4.mul(np.array(G1[0]), 2), gf4.add(G1[0], G1[1])])
    assert swapped == C and scaled == C and hash(scaled) == hash(C)


def test_example_duals(example, gf4):
    C, D = example["C"], example["D"]
    Ch = dual_hermitian(C)
    assert (Ch.n, Ch.k, min_distance(Ch)) == (6, 4, 2)
    assert (C.n, C.k, min_distance(C)) == (6, 2, 3)
    assert dual_hermitian(Ch) == C
    assert dual_euclidean(LinearCode(gf4, np.eye(6, dtype=np.int64))).k == 0
    assert intersection_dim(C, dual(D, "hermitian")) == 0
    assert intersection_dim(Ch, dual(D, "hermitian")) == 2
    assert intersection_dim(C, C) == 2
    assert hull_dim(C, "hermitian") == 0 and hull_dim(Ch, "hermitian") == 0
    assert hull_dim(D, "hermitian") == 2 and hull_dim(example["Dh"], "hermitian") == 2
    assert cross_rank(C, D, "hermitian") == 2


@pytest.mark.parametrize("q,flavor", [(2, "euclidean"), (3, "euclidean"), (4, "euclidean"),
                                      (4, "hermitian"), (9, "hermitian")])
def test_dual_against_brute_force(q, flavor):
    F = field_from_order(q)
    rng = np.random.default_rng(q)
    top = 6 if q <= 4 else 4
    for _ in range(10):
        n = int(rng.integers(2, top))
        C = random_code(F, n, int(rng.integers(1, n)), rng)
        want = dual_space(F, C.G, n, hermitian=flavor == "hermitian")
        assert codewords(F, dual(C, flavor).G) == want
        assert dual(dual(C, flavor), flavor) == C


@pytest.mark.parametrize("q", [2, 3, 4])
def test_intersection_against_brute_force(q):
    F = field_from_order(q)
    rng = np.random.default_rng(20 + q)
    for _ in range(15):
        n = int(rng.integers(2, 6))
        C = random_code(F, n, int(rng.integers(1, n + 1)), rng)
        D = random_code(F, n, int(rng.integers(1, n + 1)), rng)
        both = codewords(F, C.G) & codewords(F, D.G)
        I = intersect(C, D)
        assert codewords(F, I.G) == both
        assert F.q ** intersection_dim(C, D) == len(both)


@pytest.mark.parametrize("q,flavor", [(2, "euclidean"), (3, "euclidean"), (4, "hermitian"),
                                      (8, "euclidean"), (16, "hermitian")])
def test_hull_three_ways(q, flavor):
    F = field_from_order(q)
    rng = np.random.default_rng(30 + q)
    for _ in range(20):
        n = int(rng.integers(2, 8))
        C = random_code(F, n, int(rng.integers(1, n + 1)), rng)
        h = hull_dim(C, flavor)
        assert h == C.k - rank(gram(C, C, flavor))
        assert h == intersection_dim(C, dual(C, flavor))
        assert cross_rank(C, C, flavor) == C.k - h
        assert cross_rank(C, dual(C, flavor), flavor) == 0
        assert hull(C, flavor).k == h


def test_hermitian_needs_even_degree():
    F = field_make(2, 3)
    with pytest.raises(NoHermitianStructure):
        dual(LinearCode(F, [[1, 2, 3]]), "hermitian")


def test_distance_examples():
    F2 = field_make(2)
    for q in (2, 3, 4):
        assert min_distance(repetition(field_from_order(q), 5)) == 5
    assert min_distance(family_binary_sd(4)) == 4
    assert min_distance(simplex(3)) == 4
    assert weight_distribution(repetition(F2, 2)) == [1, 0, 1]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_weights_against_brute_force(q):
    F = field_from_order(q)
    rng = np.random.default_rng(40 + q)
    for _ in range(10):
        n = int(rng.integers(2, 8 if q <= 4 else 6))
        k = int(rng.integers(1, min(n, 4 if q <= 4 else 3) + 1))
        C = random_code(F, n, k, rng)
        wd = weight_distribution(C)
        assert wd == brute_wd(F, C.G, n)
        assert sum(wd) == F.q**C.k
        assert min_distance(C) == brute_min_distance(F, C.G)


def test_dual_side_enumeration_via_macwilliams():
    # high-rate codes whose duals are small: weights come from the dual side
    rng = np.random.default_rng(7)
    for q, n, k in [(2, 20, 17), (3, 10, 8), (4, 8, 6)]:
        F = field_from_order(q)
        C = random_code(F, n, k, rng)
        cheap = LinearCode(F, C.G)
        want = weight_distribution(cheap, cap=q**k)
        assert weight_distribution(C, cap=q ** (n - k)) == want


def test_budget_exceeded():
    F = field_make(2)
    C = LinearCode(F, np.random.default_rng(1).integers(2, size=(20, 40)))
    with pytest.raises(BudgetExceeded):
        weight_distribution(C, cap=1000)
    rep = classify(C, cap=1000)
    assert rep.d is None and rep.distance_mode == "unknown" and "d" in rep.reasons


def test_fsd():
    F2 = field_make(2)
    sd = family_binary_sd(4)
    assert is_fsd(sd)
    C = LinearCode(F2, [[1, 1, 1, 0], [0, 0, 0, 1]])
    assert brute_wd(F2, C.G, 4) != brute_wd(F2, dual(C).G, 4)
    assert not is_fsd(C)


def test_even_like():
    F2 = field_make(2)
    assert is_even_like(even_weight(5))
    assert is_even_like(simplex(3))
    assert not is_even_like(repetition(F2, 3))
    with pytest.raises(NotBinary):
        is_even_like(repetition(field_make(3), 3))


def test_griesmer():
    assert griesmer(2, 3, 3) == 6
    for q in (2, 3, 4):
        for d in range(1, 9):
            assert griesmer(q, 1, d) == d
    for t in range(1, 11):
        assert griesmer(2, t + 1, 2**t - 1) == 2 ** (t + 1) - 2
    F2 = field_make(2)
    C = LinearCode(F2, [[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]])
    assert (C.n, C.k, min_distance(C)) == (6, 3, 3) and meets_griesmer(C)


def test_classify_examples(example):
    rep = classify(example["D"])
    assert rep.flags["so_h"] and rep.hull_h == 2 == rep.k
    assert classify(example["C"]).flags["lcd_h"]
    r2 = classify(repetition(field_make(2), 2))
    assert r2.flags["sd_e"] and r2.flags["even_like"]
    r3 = classify(LinearCode(field_make(3), [[1, 2, 0]]))
    assert r3.hull_h is None and "hull_h" in r3.reasons


def test_classify_flag_consistency():
    rng = np.random.default_rng(8)
    for q in (2, 3, 4):
        F = field_from_order(q)
        for _ in range(20):
            n = int(rng.integers(2, 7))
            C = random_code(F, n, int(rng.integers(1, n + 1)), rng)
            rep = classify(C)
            assert rep.flags["lcd_e"] == (rep.hull_e == 0)
            assert rep.flags["so_e"] == (rep.hull_e == C.k)
            assert rep.flags["sd_e"] == (rep.flags["so_e"] and n == 2 * C.k)
            assert gram_flags(C)["lcd"] == rep.flags["lcd_e"]
            if rep.flags["sd_e"]:
                assert rep.flags["fsd_e"]


def test_permutation(example):
    D = example["D"]
    assert apply_permutation(D, list(range(6))) == D
    rng = np.random.default_rng(9)
    for _ in range(100):
        P = apply_permutation(D, rng.permutation(6))
        assert hull_dim(P, "hermitian") == 2
    with pytest.raises(NotAPermutation):
        apply_permutation(D, [0, 0, 1, 2, 3, 4])


@given(st.sampled_from([2, 3, 4]), st.integers(2, 7), st.data())
def test_distance_is_permutation_invariant(q, n, data):
    F = field_from_order(q)
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                              min_size=1, max_size=3))
    C = LinearCode(F, rows)
    if C.k == 0:
        return
    perm = data.draw(st.permutations(range(n)))
    P = apply_permutation(C, perm)
    assert weight_distribution(P) == weight_distribution(C)
    assert hull_dim(P) == hull_dim(C)
