import numpy as np
import pytest
from hypothesis import given, strategies as st

from hullcodes.errors import DimensionMismatch, LengthMismatch, NotSquare
from hullcodes.field import field_from_order, field_make
from hullcodes.matrix import (
    Matrix,
    ToeplitzSpec,
    block_diag,
    conj_transpose,
    exchange_matrix,
    hstack,
    identity,
    inverse,
    kernel,
    mat_mul,
    monomial_check,
    poly_eval_matrix,
    rank,
    rref,
    toeplitz,
    transpose,
    vstack,
    zeros,
)
from oracles import dimension, dual_space

from conftest import G1, G2


def random_matrix(F, rows, cols, rng):
    return Matrix(F, rng.integers(F.q, size=(rows, cols)))


def test_rref_basics(gf4):
    R, r, piv = rref(identity(gf4, 4))
    assert R == identity(gf4, 4) and r == 4 and piv == [0, 1, 2, 3]
    R, r, piv = rref(zeros(gf4, 2, 3))
    assert R == zeros(gf4, 2, 3) and r == 0 and piv == []
    assert rank(Matrix(gf4, G1)) == 2


def test_kernel_of_example_generator(gf4):
    K = kernel(Matrix(gf4, G1))
    assert K.shape == (4, 6)
    assert mat_mul(Matrix(gf4, G1), transpose(K)).is_zero()
    assert kernel(identity(gf4, 3)).rows == 0
    full = kernel(zeros(gf4, 1, 5))
    assert full.rows == 5 and rank(full) == 5


def test_products_and_conjugation(gf4):
    rng = np.random.default_rng(1)
    M = random_matrix(gf4, 3, 5, rng)
    assert mat_mul(M, identity(gf4, 5)) == M
    assert conj_transpose(conj_transpose(M)) == M
    G = Matrix(gf4, G2)
    assert mat_mul(G, conj_transpose(G)).is_zero()
    with pytest.raises(DimensionMismatch):
        mat_mul(M, M)


def test_stacking(gf4):
    A, B = identity(gf4, 2), zeros(gf4, 2, 3)
    assert hstack([A, B]).shape == (2, 5)
    assert vstack([A, identity(gf4, 2)]).shape == (4, 2)
    D = block_diag([A, identity(gf4, 3)])
    assert D == identity(gf4, 5)


def test_matrix_is_immutable(gf4):
    M = identity(gf4, 2)
    with pytest.raises(ValueError):
        M.array[0, 0] = 0


def test_entries_validated(gf4):
    with pytest.raises(ValueError):
        Matrix(gf4, [[4]])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_rank_and_kernel_against_brute_force(q):
    F = field_from_order(q)
    rng = np.random.default_rng(q)
    for _ in range(15):
        rows, cols = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        M = random_matrix(F, rows, cols, rng)
        r = rank(M)
        assert r == dimension(F, M.array)
        K = kernel(M)
        assert K.rows == cols - r
        assert mat_mul(M, transpose(K)).is_zero()
        # kernel rows span the whole orthogonal space
        assert F.q ** K.rows == len(dual_space(F, M.array, cols))


@pytest.mark.parametrize("q", [2, 3, 4, 7])
def test_rref_is_canonical(q):
    F = field_from_order(q)
    rng = np.random.default_rng(10 + q)
    for _ in range(20):
        M = random_matrix(F, 3, 6, rng)
        R, r, piv = rref(M)
        # reduced: pivot columns are unit vectors and pivots have value 1
        for i, c in enumerate(piv):
            col = R.array[:r, c]
            assert col[i] == 1 and np.count_nonzero(col) == 1
        # invariant under a random invertible change of basis
        while True:
            P = random_matrix(F, 3, 3, rng)
            if rank(P) == 3:
                break
        assert rref(mat_mul(P, M))[0] == R


def test_inverse(gf4):
    rng = np.random.default_rng(3)
    for _ in range(20):
        M = random_matrix(gf4, 4, 4, rng)
        if rank(M) == 4:
            assert mat_mul(M, inverse(M)) == identity(gf4, 4)
    with pytest.raises(NotSquare):
        inverse(zeros(gf4, 2, 3))
    with pytest.raises(ValueError):
        inverse(zeros(gf4, 2, 2))


def test_binary_packed_rref_matches_generic():
    from hullcodes.matrix import _rref_generic, _rref_gf2

    F = field_make(2)
    rng = np.random.default_rng(4)
    for shape in [(5, 70), (70, 130), (3, 64), (64, 3)]:
        a = rng.integers(2, size=shape)
        R1, r1, p1 = _rref_gf2(a)
        R2, r2, p2 = _rref_generic(F, a)
        assert r1 == r2 and list(p1) == list(p2)
        assert np.array_equal(R1[:r1], R2[:r2])


def test_toeplitz_examples(gf4):
    n = 4
    assert toeplitz(gf4, ToeplitzSpec(1, (0,) * 3, (0,) * 3), n) == identity(gf4, n)
    shift = toeplitz(gf4, ToeplitzSpec(0, (1, 0, 0), (0, 0, 0)), n)
    assert np.array_equal(shift.array, np.eye(n, k=1, dtype=np.int64))
    with pytest.raises(LengthMismatch):
        toeplitz(gf4, ToeplitzSpec(0, (1,), (0,)), n)


@given(st.sampled_from([2, 3, 4, 5, 8]), st.integers(1, 6), st.data())
def test_toeplitz_persymmetry(q, n, data):
    F = field_from_order(q)
    elem = st.integers(0, q - 1)
    spec = ToeplitzSpec(
        data.draw(elem),
        tuple(data.draw(st.lists(elem, min_size=n - 1, max_size=n - 1))),
        tuple(data.draw(st.lists(elem, min_size=n - 1, max_size=n - 1))),
    )
    M = toeplitz(F, spec, n)
    J = exchange_matrix(F, n)
    assert transpose(M) == mat_mul(mat_mul(J, M), J)
    i, j = np.indices((n, n))
    for r, c in zip(i.ravel(), j.ravel()):
        want = spec.t if r == c else (spec.a[c - r - 1] if c > r else spec.b[r - c - 1])
        assert M.array[r, c] == want


def test_poly_eval_matrix(gf4):
    rng = np.random.default_rng(5)
    A = random_matrix(gf4, 3, 3, rng)
    assert poly_eval_matrix([0, 1], A) == A
    assert poly_eval_matrix([1], A) == identity(gf4, 3)
    F2 = field_make(2)
    J = exchange_matrix(F2, 2)
    assert poly_eval_matrix([1, 0, 1], J).is_zero()
    # x^2 + w x + 1 by direct products
    f = [1, 2, 1]
    want = mat_mul(A, A).array
    want = gf4.add(want, gf4.mul(A.array, 2))
    want = gf4.add(want, np.eye(3, dtype=np.int64))
    assert poly_eval_matrix(f, A) == Matrix(gf4, want)


def test_monomial_and_exchange(gf4):
    assert monomial_check(identity(gf4, 3))
    assert not monomial_check(zeros(gf4, 3, 3))
    J = exchange_matrix(gf4, 3)
    assert J.array[0, 2] == 1 and J.array[2, 0] == 1 and J.array[1, 1] == 1
    assert mat_mul(J, J) == identity(gf4, 3)
    assert monomial_check(Matrix(gf4, [[0, 2], [3, 0]]))
    assert not monomial_check(Matrix(gf4, [[1, 1], [0, 1]]))
