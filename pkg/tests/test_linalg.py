import random

from qfab.field import QQ, PrimeField
from qfab.linalg import (Matrix, rref, rank, kernel_basis, solve, inverse,
                         is_invertible, Subspace, from_columns)


def mat(rows, field=QQ):
    return Matrix.from_rows(rows, field)


def test_kernel_identity_is_empty():
    assert kernel_basis(Matrix.identity(3)) == []


def test_kernel_zero_matrix_is_standard_basis():
    ker = kernel_basis(Matrix.zero(2, 3))
    assert len(ker) == 3
    eye = Matrix.identity(3)
    assert [list(v) for v in ker] == [eye.column(j) for j in range(3)]


def test_kernel_rank_one():
    ker = kernel_basis(mat([[1, 2], [2, 4]]))
    assert len(ker) == 1
    v = ker[0]
    # canonical echelon kernel vector: free coordinate one
    assert v[1] == QQ.one and v[0] == QQ(-2)


def test_solve_identity():
    b = [QQ(5), QQ(-1), QQ(2)]
    assert solve(Matrix.identity(3), b) == b


def test_solve_free_variable_zeroed():
    x = solve(mat([[1, 1]]), [QQ(1)])
    assert x == [QQ(1), QQ(0)]


def test_solve_inconsistent():
    assert solve(mat([[1], [2]]), [QQ(1), QQ(1)]) is None


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(25):
        m = mat([[rng.randrange(-4, 5) for _ in range(4)] for _ in range(3)])
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(50):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = mat([[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(rows)])
        assert rank(m) + len(kernel_basis(m)) == cols


def test_solve_is_exact():
    rng = random.Random(13)
    for _ in range(30):
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 5)
        m = mat([[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(rows)])
        x = [QQ(rng.randrange(-3, 4), rng.randrange(1, 4)) for _ in range(cols)]
        b = m.apply(x)
        got = solve(m, b)
        assert got is not None
        assert m.apply(got) == b


def test_prime_field_rank_agrees_with_rational():
    rng = random.Random(17)
    F = PrimeField(1000003)
    for _ in range(25):
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 5)
        data = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        assert rank(mat(data)) == rank(mat(data, F))


def test_inverse_and_product():
    m = mat([[2, 1], [1, 1]])
    inv = inverse(m)
    assert inv is not None
    assert m * inv == Matrix.identity(2)
    assert not is_invertible(mat([[1, 2], [2, 4]]))


def test_subspace_membership_and_coordinates():
    sub = Subspace(3)
    assert sub.insert([QQ(1), QQ(1), QQ(0)])
    assert sub.insert([QQ(0), QQ(1), QQ(1)])
    assert not sub.insert([QQ(1), QQ(2), QQ(1)])
    assert sub.contains([QQ(2), QQ(3), QQ(1)])
    assert not sub.contains([QQ(0), QQ(0), QQ(1)])
    coords = sub.coordinates([QQ(2), QQ(3), QQ(1)])
    assert coords is not None


def test_from_columns_shape():
    m = from_columns([[QQ(1), QQ(0)], [QQ(1), QQ(1)]], 2)
    assert m.rows == 2 and m.cols == 2
    assert m.column(1) == [QQ(1), QQ(1)]
    empty = from_columns([], 3)
    assert empty.rows == 3 and empty.cols == 0
