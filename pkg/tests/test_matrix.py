from fractions import Fraction

from iterant.matrix import Matrix, rank, solve
from iterant.scalars import zeta


def test_products_and_powers():
    m = Matrix([[1, 1], [0, 1]])
    assert m ** 3 == Matrix([[1, 3], [0, 1]])
    assert m * m.inverse() == Matrix.identity(2)


def test_det_and_charpoly():
    m = Matrix([[1, 2], [3, 4]])
    assert m.det() == -2
    # x^2 - 5x - 2, constant first
    assert m.charpoly() == [-2, -5, 1]


def test_dagger_and_hermitian():
    i = zeta(4)
    m = Matrix([[0, -i], [i, 0]])
    assert m.dagger() == m
    assert m.is_hermitian()
    assert not Matrix([[0, 1], [0, 0]]).is_hermitian()


def test_rank_and_solve():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([Matrix.identity(2), Matrix([[0, 1], [1, 0]])]) == 2
    assert solve(Matrix([[2, 0], [0, 4]]), [2, 2]) == [1, Fraction(1, 2)]
    assert solve(Matrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_brackets():
    a, b = Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)
    assert a.anticommutator(b) == Matrix.identity(2)
    assert a.commutator(b) == Matrix.diag([1, -1])
