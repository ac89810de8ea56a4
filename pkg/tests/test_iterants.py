import pytest
from hypothesis import given, strategies as st

from iterant.errors import DecompositionError, GroupError, GroupMismatchError
from iterant.groups import cyclic, klein4, symmetric
from iterant.iterants import (
    Iterant,
    basic_idempotent,
    conj2,
    det2,
    from_matrix,
    it_anticommutator,
    it_commutator,
    it_trace,
)
from iterant.matrix import Matrix
from iterant.physics import eta_group
from iterant.scalars import zeta

from conftest import cyclotomics, iterants

E = eta_group()
C3 = cyclic(3)
h = Iterant.element(E, "h")


def vec(*xs, g=None, G=E):
    return Iterant.vector(G, list(xs), g)


def test_iterant_i_squares_to_minus_one():
    i = vec(1, -1, g="h")
    assert i * i == -1


def test_half_idempotents():
    A, B = vec(1, 0, g="h"), vec(0, 1, g="h")
    assert A * B == vec(1, 0)
    assert B * A == vec(0, 1)


def test_vector_slides_through_swap():
    # [b,c] h = h [c,b]
    assert vec(2, 7) * h == h * vec(7, 2)


def test_vector_slides_through_three_cycle():
    S = Iterant.element(C3, "S")
    assert vec(1, 2, 3, G=C3) * S == S * vec(3, 1, 2, G=C3)


def test_idempotents_n2():
    e1, e2 = basic_idempotent(E, 1), basic_idempotent(E, 2)
    assert e1 == vec(1, 0) and e2 == vec(0, 1)
    assert e1 * e2 == 0
    assert e1 * e1 == e1
    assert e1 + e2 == 1
    assert e1 * h == h * e2


def test_idempotents_sum_to_unit():
    G = klein4()
    total = Iterant.zero(G)
    for k in range(1, 5):
        total = total + basic_idempotent(G, k)
    assert total == Iterant.unit(G)
    with pytest.raises(GroupError):
        basic_idempotent(G, 5)


def test_completeness_times_element():
    assert (vec(1, 0) + vec(0, 1)) * h == h


def test_zero_and_scaling():
    x = vec(3, 4, g="h")
    assert x + Iterant.zero(E) == x
    assert x.scale(0) == Iterant.zero(E)
    assert not Iterant.zero(E).terms


def test_to_matrix_degree_two():
    z = Iterant(E, {"1": [2, 3], "h": [5, 7]})
    assert z.to_matrix() == Matrix([[2, 5], [7, 3]])


def test_to_matrix_degree_three():
    # [a,b,c] + [d,e,f]S + [g,h,k]S^2 with a..k = 1..9
    x = Iterant(C3, {"1": [1, 2, 3], "S": [4, 5, 6], "S^2": [7, 8, 9]})
    assert x.to_matrix() == Matrix([[1, 4, 7], [8, 2, 5], [6, 9, 3]])
    assert str(x) == "[1,2,3] + [4,5,6]S + [7,8,9]S^2"


def test_from_matrix_examples():
    assert from_matrix(Matrix.identity(3), C3) == Iterant.unit(C3)
    assert from_matrix(Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]), C3) == Iterant.element(C3, "S")
    assert from_matrix(Matrix.zero(3), C3) == 0


def test_from_matrix_needs_tiling():
    G = symmetric(3, natural=True)
    with pytest.raises(DecompositionError) as err:
        from_matrix(Matrix.identity(3), G)
    assert "multiply covered" in str(err.value)
    with pytest.raises(DecompositionError):
        from_matrix(Matrix.identity(2), C3)


def test_conjugate_is_adjoint():
    z = Iterant(E, {"1": [2, 3], "h": [1, 5]})
    assert conj2(z) == Iterant(E, {"1": [3, 2], "h": [-1, -5]})
    assert conj2(z).to_matrix() == Matrix([[3, -1], [-5, 2]])
    assert conj2(Iterant.unit(E)) == Iterant.unit(E)


def test_determinant_example():
    # direct 2x2 oracle: [[2,1],[5,3]] has det 6 - 5
    z = Iterant(E, {"1": [2, 3], "h": [1, 5]})
    assert det2(z) == 1 == z.to_matrix().det()
    assert det2(Iterant.unit(E)) == 1


def test_determinant_needs_swap_group():
    with pytest.raises(GroupError):
        det2(Iterant.unit(C3))


def test_commutators_and_trace():
    x = vec(1, 2, g="h")
    assert it_commutator(x, x) == 0
    eps = vec(1, -1)
    assert it_anticommutator(h, eps) == 0
    assert it_trace(vec(4, 9)) == 13
    assert it_trace(h) == 0


def test_inverse():
    x = Iterant(C3, {"1": [1, 2, 3], "S": [1, 0, 1]})
    assert x * x.inverse() == 1
    with pytest.raises(ArithmeticError):
        vec(1, 0).inverse()


def test_group_mismatch():
    with pytest.raises(GroupMismatchError):
        Iterant.unit(E) * Iterant.unit(C3)


def test_wrong_vector_length():
    with pytest.raises(GroupError):
        Iterant(E, {"h": [1, 2, 3]})


GROUPS = [E, C3, cyclic(6), klein4(), symmetric(3)]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_homomorphism_property(G):
    @given(iterants(G), iterants(G))
    def check(x, y):
        assert (x * y).to_matrix() == x.to_matrix() * y.to_matrix()
        assert (x + y).to_matrix() == x.to_matrix() + y.to_matrix()
        assert from_matrix(x.to_matrix(), G) == x

    check()


@given(iterants(C3), iterants(C3), iterants(C3))
def test_associative_and_distributive(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * 1 == x == 1 * x


@given(iterants(E), iterants(E))
def test_determinant_multiplicative(z, w):
    assert det2(z * w) == det2(z) * det2(w)
    assert z * conj2(z) == conj2(z) * z
    assert conj2(conj2(z)) == z


@given(st.lists(cyclotomics(), min_size=36, max_size=36))
def test_c6_matrix_round_trip(entries):
    G = cyclic(6)
    m = Matrix([entries[6 * r:6 * r + 6] for r in range(6)])
    assert from_matrix(m, G).to_matrix() == m


def test_trace_matches_matrix():
    i = zeta(4)
    x = Iterant(E, {"1": [i, 2], "h": [1, 1]})
    assert x.trace() == x.to_matrix().trace() == 2 + i
