import numpy as np
import pytest

from hullcodes.code import LinearCode, classify, dual, gram, hull_dim, min_distance
from hullcodes.errors import (
    DuplicatePoints,
    ExtendedNotSupported,
    OddCharacteristic,
    ParameterOutOfRange,
    ZeroScalar,
)
from hullcodes.field import field_from_order, field_make
from hullcodes.grs import (
    INF,
    GrsSpec,
    build_table4,
    build_table5,
    extended_dual_hermitian,
    extended_subcode,
    grs_code,
    grs_dual_euclidean,
    grs_dual_hermitian,
    grs_nested,
    grs_so_euclidean,
    grs_so_hermitian,
    grs_so_hermitian_extended,
    rootless_form,
)
from hullcodes.matrix import kernel, Matrix
from oracles import min_distance as brute_min_distance


def random_spec(F, n, k, rng, extended=False):
    pts = [int(x) for x in rng.permutation(F.q)[: n - extended]]
    if extended:
        pts.append(INF)
    return GrsSpec(F, pts, [int(x) for x in rng.integers(1, F.q, size=n)], k)


def test_small_codes(gf4):
    C = grs_code(GrsSpec(gf4, [0, 1, 2, 3], [1, 1, 1, 1], 1))
    assert (C.n, C.k, min_distance(C)) == (4, 1, 4)
    full = grs_code(GrsSpec(gf4, [0, 1, 2, 3], [1, 2, 3, 1], 4))
    assert (full.k, min_distance(full)) == (4, 1)
    F8 = field_make(2, 3)
    C = grs_code(GrsSpec(F8, [0, 1, 2, 3, 4], [1] * 5, 2))
    assert (C.n, C.k) == (5, 2)
    assert brute_min_distance(F8, C.G) == 4


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_mds_against_brute_force(q):
    F = field_from_order(q)
    rng = np.random.default_rng(q)
    for _ in range(6):
        n = int(rng.integers(2, min(q, 6) + 1))
        k = int(rng.integers(1, min(n, 3) + 1))
        spec = random_spec(F, n, k, rng, extended=bool(rng.integers(2)) and n > 2)
        C = grs_code(spec)
        assert brute_min_distance(F, C.G) == n - k + 1 == C.design_distance


def test_spec_validation(gf4):
    with pytest.raises(DuplicatePoints):
        GrsSpec(gf4, [0, 0], [1, 1], 1)
    with pytest.raises(ZeroScalar):
        GrsSpec(gf4, [0, 1], [1, 0], 1)
    with pytest.raises(ParameterOutOfRange):
        GrsSpec(gf4, [0, 1], [1, 1], 3)
    spec = GrsSpec(gf4, [0, 1, INF], [1, 2, 3], 2)
    assert GrsSpec.from_dict(spec.to_dict()) == spec


def test_euclidean_dual_formula(gf4):
    spec = GrsSpec(gf4, [0, 1, 2, 3], [1, 1, 1, 1], 1)
    d = grs_dual_euclidean(spec)
    K = LinearCode(gf4, kernel(Matrix(gf4, grs_code(spec).G)).array)
    assert grs_code(d) == K
    F8 = field_make(2, 3)
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        spec = random_spec(F8, n, int(rng.integers(1, n)), rng)
        d = grs_dual_euclidean(spec)
        assert gram(grs_code(spec), grs_code(d)).is_zero()
        assert grs_code(grs_dual_euclidean(d)) == grs_code(spec)
    with pytest.raises(ExtendedNotSupported):
        grs_dual_euclidean(GrsSpec(F8, [0, INF], [1, 1], 1))


def test_hermitian_dual_formula():
    F = field_make(2, 4)
    rng = np.random.default_rng(2)
    for _ in range(20):
        n = int(rng.integers(2, 12))
        spec = random_spec(F, n, int(rng.integers(1, n)), rng)
        d = grs_dual_hermitian(spec)
        assert d.k == n - spec.k
        assert grs_code(d) == dual(grs_code(spec), "hermitian")
    sub = [int(x) for x in F.subfield_elements()]
    spec = GrsSpec(F, sub, [1, 2, 3, 4], 2)
    assert grs_dual_hermitian(spec).points == spec.points


def test_nesting(gf4):
    spec = GrsSpec(gf4, [0, 1, 2, 3], [1, 2, 3, 1], 2)
    assert grs_nested(spec, 2, 2)
    assert grs_nested(spec, 1, 3)
    assert not grs_nested(spec, 3, 2)


@pytest.mark.parametrize("q,n,k", [(4, 4, 1), (8, 5, 2), (8, 8, 2), (8, 8, 4), (16, 16, 8)])
def test_euclidean_so(q, n, k):
    F = field_from_order(q)
    C = grs_code(grs_so_euclidean(F, n, k))
    assert (C.n, C.k) == (n, k)
    assert gram(C, C).is_zero() and hull_dim(C) == k
    if q**k <= 1 << 16:
        assert min_distance(C) == n - k + 1


@pytest.mark.parametrize("q,n,k", [(16, 2, 1), (64, 8, 2), (64, 5, 2), (16, 4, 2)])
def test_hermitian_so(q, n, k):
    F = field_from_order(q)
    C = grs_code(grs_so_hermitian(F, n, k))
    assert gram(C, C, "hermitian").is_zero()
    assert (C.n, C.k, min_distance(C)) == (n, k, n - k + 1)


def test_so_constructions_need_char2():
    with pytest.raises(OddCharacteristic):
        grs_so_euclidean(field_make(3, 2), 4, 1)


@pytest.mark.parametrize("q,params", [(16, (17, 4, 14)), (64, (65, 8, 58))])
def test_extended_hermitian_so(q, params):
    F = field_from_order(q)
    C = grs_code(grs_so_hermitian_extended(F))
    rep = classify(C)
    assert (C.n, C.k) == params[:2] and C.design_distance == params[2]
    assert rep.flags["so_h"] and rep.hull_h == C.k
    if q == 16:
        assert rep.d == 14 and rep.distance_mode == "exact-enumerated"


def test_extended_dual_and_subcodes():
    F = field_from_order(16)
    spec = grs_so_hermitian_extended(F)
    d = extended_dual_hermitian(spec)
    assert d.k == 13 and grs_code(d) == dual(grs_code(spec), "hermitian")
    for k1 in (11, 10, 9, 5):
        sub = extended_subcode(d, k1)
        inside = np.vstack([grs_code(d).G, grs_code(sub).G])
        assert LinearCode(F, inside).k == d.k
    with pytest.raises(ParameterOutOfRange):
        extended_subcode(d, 12)


@pytest.mark.parametrize("q", [4, 8, 16, 64])
def test_rootless_forms(q):
    F = field_from_order(q)
    for deg in (0, 2, 3, 4, 5, 7):
        f = rootless_form(F, deg)
        assert len(f) == deg + 1 and f[-1] == 1
        for x in range(q):
            acc = 0
            for c in reversed(f):
                acc = int(F.add(F.mul(acc, x), c))
            assert acc != 0


def test_table_iv_sample_row():
    row = build_table4(rows=[2])[0]
    assert (row.code.n, row.code.k, row.report.d) == (8, 4, 4)
    assert row.report.flags["sd_e"]


def test_table_v_sample_rows():
    r6, r23 = build_table5(rows=[5, 22])
    assert (r6.code.n, r6.code.k, r6.report.d) == (34, 17, 10)
    assert r6.report.flags["sd_h"]
    assert (r23.code.n, r23.code.k, r23.report.d) == (130, 65, 18)
    assert r23.report.distance_mode == "design-value"
    assert r23.report.hull_h == 65 and r23.report.flags["sd_h"]
