import numpy as np
import pytest
from hypothesis import given, strategies as st

from hullcodes.code import (
    LinearCode,
    classify,
    dual,
    gram_flags,
    griesmer,
    hull_dim,
    intersection_dim,
    is_even_like,
    min_distance,
)
from hullcodes.constructions import (
    direct_sum,
    direct_sum_criteria,
    direct_sum_parity,
    even_weight,
    family_binary_almost_so_simplex,
    family_binary_sd,
    family_binary_so_rm,
    family_binary_so_tower,
    lcd_bound_combine,
    lcd_combine_codes,
    matrix_product,
    predict_direct_sum_hull,
    predict_uuv_hull,
    repetition,
    simplex,
    stock_code,
    u_uv,
    uuv_criteria,
    uuv_parity,
    uuv_repetition_binary,
)
from hullcodes.errors import (
    FieldMismatch,
    LengthMismatch,
    NotApplicable,
    NotEvenLike,
    NotLCD,
    OddN,
    UnsupportedKind,
)
from hullcodes.field import field_from_order, field_make
from hullcodes.matrix import Matrix
from oracles import codewords
from oracles import min_distance as brute_min_distance

H = "hermitian"


def params(C):
    return C.n, C.k, min_distance(C)


def test_direct_sum_examples(example):
    C, D, Dh = example["C"], example["D"], example["Dh"]
    S = direct_sum(C, Dh)
    assert params(S) == (12, 6, 2) and hull_dim(S, H) == 2
    S = direct_sum(Dh, Dh)
    assert params(S) == (12, 8, 2) and hull_dim(S, H) == 4
    assert predict_direct_sum_hull(C, C, H).exact == 0
    assert predict_direct_sum_hull(D, Dh, H).exact == 4
    assert predict_direct_sum_hull(C, example["Ch"], H).exact == 0


def test_direct_sum_criteria(example):
    C, D = example["C"], example["D"]
    assert direct_sum_criteria(C, C, H)["lcd"]
    assert direct_sum_criteria(D, D, H)["so"]
    v = direct_sum_criteria(C, D, H)
    assert not v["lcd"] and not v["so"]


def test_uuv_examples(example):
    C, D, Dh = example["C"], example["D"], example["Dh"]
    U = u_uv(C, D)
    assert params(U) == (12, 4, 4) and hull_dim(U, H) == 0
    U = u_uv(Dh, D)
    assert params(U) == (12, 6, 4) and hull_dim(U, H) == 6 and gram_flags(U, H)["sd"]
    U = u_uv(D, D)
    assert params(U) == (12, 4, 4) and hull_dim(U, H) == 4 and gram_flags(U, H)["so"]


def test_uuv_prediction_examples(example):
    C, D, Dh = example["C"], example["D"], example["Dh"]
    # 2 dim(Dh ∩ D^⊥H) + k2 - k1 = 2*4 + 2 - 4
    assert intersection_dim(Dh, dual(D, H)) == 4
    assert predict_uuv_hull(Dh, D, H).exact == 6
    assert predict_uuv_hull(C, D, H).exact == 0
    assert predict_uuv_hull(D, D, H).exact == 4


def test_uuv_criteria(example):
    C, D, Dh = example["C"], example["D"], example["Dh"]
    assert uuv_criteria(Dh, D, H)["sd"]
    assert uuv_criteria(C, D, H)["lcd"]
    assert uuv_criteria(D, D, H)["so"]
    F3 = field_make(3)
    with pytest.raises(NotApplicable):
        uuv_criteria(LinearCode(F3, [[1, 1, 0]]), LinearCode(F3, [[1, 0, 0]]))


def test_uuv_prediction_not_applicable_in_odd_characteristic():
    F3 = field_make(3)
    pred = predict_uuv_hull(LinearCode(F3, [[1, 0, 0]]), LinearCode(F3, [[1, 1, 1]]))
    assert not pred.applicable and pred.reason


def test_rule_errors(example):
    F2 = field_make(2)
    with pytest.raises(FieldMismatch):
        direct_sum(example["C"], repetition(F2, 3))
    with pytest.raises(LengthMismatch):
        u_uv(repetition(F2, 3), repetition(F2, 4))


def test_uuv_repetition_examples():
    C, h = uuv_repetition_binary(even_weight(4))
    assert params(C) == (8, 4, 4) and h == 4 and gram_flags(C)["sd"]
    C, h = uuv_repetition_binary(even_weight(3))
    assert params(C) == (6, 3, 3) and h == 2
    assert classify(C).flags["almost_sd_e"]
    C, h = uuv_repetition_binary(simplex(3))
    assert params(C) == (14, 4, 7) and h == 3 and griesmer(2, 4, 7) == 14
    with pytest.raises(NotEvenLike):
        uuv_repetition_binary(repetition(field_make(2), 3))


def test_parity():
    assert uuv_parity(even_weight(4)) == "even_like"
    assert uuv_parity(even_weight(3)) == "odd_like"
    for n in range(2, 11):
        C, _ = uuv_repetition_binary(even_weight(n))
        want = "even_like" if is_even_like(C) else "odd_like"
        assert uuv_parity(even_weight(n)) == want
    F2 = field_make(2)
    assert direct_sum_parity(even_weight(4), even_weight(4)) == "even_like"
    assert direct_sum_parity(even_weight(4), repetition(F2, 3)) == "odd_like"
    assert direct_sum_parity(repetition(F2, 3), repetition(F2, 3)) == "odd_like"


def test_matrix_product_specialisations(example):
    gf4 = example["C"].field
    C, D = example["C"], example["D"]
    assert matrix_product([C, D], Matrix(gf4, [[1, 0], [0, 1]])) == direct_sum(C, D)
    assert matrix_product([C, D], Matrix(gf4, [[1, 1], [0, 1]])) == u_uv(C, D)


def test_matrix_product_orthogonal_mixing_adds_hulls():
    # over GF(3), A = (1 1; 1 2) has A A^T = diag(2, 2)
    F = field_make(3)
    A = Matrix(F, [[1, 1], [1, 2]])
    rng = np.random.default_rng(11)
    for _ in range(30):
        n = int(rng.integers(2, 6))
        C1 = LinearCode(F, rng.integers(3, size=(int(rng.integers(1, n + 1)), n)))
        C2 = LinearCode(F, rng.integers(3, size=(int(rng.integers(1, n + 1)), n)))
        P = matrix_product([C1, C2], A)
        assert hull_dim(P) == hull_dim(C1) + hull_dim(C2)


def test_stock_codes():
    F2 = field_make(2)
    assert params(stock_code("repetition", F2, 5)) == (5, 1, 5)
    S = stock_code("simplex", size=3)
    assert params(S) == (7, 3, 4)
    assert {sum(1 for x in w if x) for w in codewords(F2, S.G) if any(w)} == {4}
    E = stock_code("even_weight", size=4)
    assert params(E) == (4, 3, 2) and is_even_like(E)
    with pytest.raises(UnsupportedKind):
        stock_code("simplex", field_make(3), 3)


def test_family_examples():
    assert params(family_binary_sd(5)) == (10, 5, 4)
    C = family_binary_sd(2)
    assert params(C) == (4, 2, 2) and gram_flags(C)["sd"]
    C = family_binary_sd(10)
    assert params(C) == (20, 10, 4) and gram_flags(C)["sd"]
    assert params(family_binary_so_tower(4, 1)) == (16, 5, 8)
    assert params(family_binary_so_tower(8, 2)) == (64, 10, 16)
    assert params(family_binary_so_tower(4, 5)) == (256, 9, 128)
    with pytest.raises(OddN):
        family_binary_so_tower(5, 1)
    assert params(family_binary_so_rm(1)) == (4, 2, 2)
    assert params(family_binary_so_rm(3)) == (16, 4, 8)
    assert params(family_binary_so_rm(7)) == (256, 8, 128)
    assert params(family_binary_almost_so_simplex(2)) == (6, 3, 3)
    assert params(family_binary_almost_so_simplex(3)) == (14, 4, 7)
    C = family_binary_almost_so_simplex(10)
    assert params(C) == (2046, 11, 1023) and griesmer(2, 11, 1023) == 2046


def test_lcd_combination(example):
    assert lcd_bound_combine((16, 8, 5), (22, 13, 5)) == (38, 21, 5)
    assert lcd_bound_combine((17, 9, 5), (23, 12, 6)) == (40, 21, 5)
    assert lcd_bound_combine((7, 3, 4), (7, 3, 4)) == (14, 6, 4)
    C = example["C"]
    S = lcd_combine_codes(C, C, H)
    assert hull_dim(S, H) == 0
    with pytest.raises(NotLCD):
        lcd_combine_codes(C, example["D"], H)


def _small_code(q, n, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                              min_size=1, max_size=3))
    return LinearCode(field_from_order(q), rows)


@given(st.sampled_from([2, 3, 4]), st.integers(2, 5), st.data())
def test_distance_rules_against_enumeration(q, n, data):
    C1, C2 = _small_code(q, n, data), _small_code(q, n, data)
    if C1.k == 0 or C2.k == 0:
        return
    d1 = brute_min_distance(C1.field, C1.G)
    d2 = brute_min_distance(C2.field, C2.G)
    S = direct_sum(C1, C2)
    assert brute_min_distance(S.field, S.G) == min(d1, d2)
    U = u_uv(C1, C2)
    assert brute_min_distance(U.field, U.G) == min(2 * d1, d2)
