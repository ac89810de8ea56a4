import itertools

import pytest
from hypothesis import given, strategies as st

from iterant.errors import DegreeMismatchError, GroupError
from iterant.groups import (
    Group,
    Perm,
    builtin_group,
    cyclic,
    klein4,
    perm_compose,
    perm_matrix,
    regular_representation,
    symmetric,
    vector_act,
    vector_pull,
)
from iterant.matrix import Matrix


def cyc(n, *cycles):
    return Perm.from_cycles(n, cycles)


def test_klein_composition():
    assert perm_compose(cyc(4, (1, 2), (3, 4)), cyc(4, (1, 3), (2, 4))) == cyc(4, (1, 4), (2, 3))


def test_compose_identity():
    p = cyc(5, (1, 3, 2), (4, 5))
    assert perm_compose(p, Perm.identity(5)) == p


def test_three_cycle_squared():
    # hand oracle: 1->2->3, 2->3->1, 3->1->2
    p = cyc(3, (1, 2, 3))
    assert [(p * p)(i) for i in (1, 2, 3)] == [3, 1, 2]
    assert p * p == cyc(3, (1, 3, 2))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        Perm.identity(2) * Perm.identity(3)


def test_not_a_permutation():
    with pytest.raises(GroupError):
        Perm([0, 0, 1])


def test_parse_cycles():
    assert Perm.parse(4, "(1 2)(3 4)") == cyc(4, (1, 2), (3, 4))
    assert str(Perm.parse(3, "()")) == "()"
    with pytest.raises(GroupError):
        Perm.parse(3, "(1 2")


def test_swap_acts_on_pair():
    swap = Perm([1, 0])
    assert vector_act(["b", "c"], swap) == ("c", "b")


def test_three_cycle_acts():
    S = cyclic(3).perm("S")
    assert vector_act(["x", "y", "z"], S) == ("z", "x", "y")
    assert vector_act(["x", "y", "z"], Perm.identity(3)) == ("x", "y", "z")


def test_act_length_mismatch():
    with pytest.raises(DegreeMismatchError):
        vector_act([1, 2], Perm.identity(3))


def test_regular_rep_of_c3():
    G = cyclic(3)
    assert perm_matrix(G.perm("S")) == Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert regular_representation(G)[G.identity].is_identity()


def test_klein_regular_rep():
    G = klein4()
    rep = regular_representation(G)
    assert [str(rep[G.index(x)]) for x in "ABC"] == ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]


def test_c6_cayley():
    G = cyclic(6)
    assert G.elements == ("1", "S", "S^2", "S^3", "S^4", "S^5")
    for i in range(6):
        for j in range(6):
            assert G.cayley[i][j] == (i + j) % 6
    assert G.cayley_text().splitlines()[1] == "S   S^2 S^3 S^4 S^5 1"


def test_trivial_group():
    G = cyclic(1)
    assert G.order == 1 and G.cayley == ((0,),)


def test_klein_relations():
    G = klein4()
    A, B, C = (G.index(x) for x in "ABC")
    assert G.mul(A, A) == G.mul(B, B) == G.mul(C, C) == G.identity
    assert G.mul(A, B) == G.mul(B, A) == C


def test_swap_matrix():
    assert perm_matrix(Perm([1, 0])) == Matrix([[0, 1], [1, 0]])
    assert perm_matrix(Perm.identity(3)) == Matrix.identity(3)


def test_builtin_names():
    assert builtin_group("cyclic(6)").order == 6
    assert builtin_group("C4").name == "C4"
    assert builtin_group("S3").degree == 6
    assert builtin_group("symmetric(3):natural").degree == 3
    for bad in ("cyclic(0)", "symmetric(7)", "dihedral(4)"):
        with pytest.raises(GroupError):
            builtin_group(bad)


def test_bad_cayley_table_rejected():
    with pytest.raises(GroupError):
        Group(["1", "a"], [[0, 1], [1, 1]])


def test_action_must_be_homomorphism():
    with pytest.raises(GroupError):
        cyclic(3).with_action([Perm.identity(3), Perm([1, 0, 2]), Perm([1, 0, 2])])


ALL_GROUPS = [cyclic(2), cyclic(3), cyclic(6), klein4(), symmetric(3), symmetric(3, natural=True), symmetric(4, natural=True)]


@pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: f"{G.name}-deg{G.degree}")
def test_action_is_homomorphism(G):
    for g, h in itertools.product(range(G.order), repeat=2):
        assert G.perm(G.mul(g, h)) == G.perm(g) * G.perm(h)


@pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: f"{G.name}-deg{G.degree}")
def test_inverses_and_powers(G):
    for g in range(G.order):
        assert G.mul(g, G.inverse(g)) == G.identity
        assert G.power(g, G.order) == G.identity


@given(st.permutations(range(5)), st.permutations(range(5)), st.lists(st.integers(), min_size=5, max_size=5))
def test_act_is_right_action(p, q, a):
    p, q = Perm(p), Perm(q)
    assert vector_act(vector_act(a, p), q) == vector_act(a, p * q)
    assert vector_pull(vector_act(a, p), p) == tuple(a)


@given(st.permutations(range(4)), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_act_matches_matrix_model(p, a):
    # diag(a) M_p = M_p diag(a acted by p)
    p = Perm(p)
    M = perm_matrix(p)
    assert Matrix.diag(a) * M == M * Matrix.diag(list(vector_act(a, p)))
