import threading

import pytest
from hypothesis import given, strategies as st

from iterant import braids, su3
from iterant.braids import BraidAlgebraElement, BraidWord, FramedBraid, fb_mul, particle, pi_hat, rho, embed_su3
from iterant.errors import IterantError, MalformedScalarError, StrandMismatchError, UnknownParticleError
from iterant.groups import Perm
from iterant.iterants import Iterant, from_matrix
from iterant.scalars import LaurentPoly, zeta

t = LaurentPoly.monomial(1)
z6 = zeta(6)


def s(k, sign=1, n=3):
    return FramedBraid.generator(n, k, sign)


letters = st.lists(st.tuples(st.integers(1, 2), st.sampled_from([1, -1])), max_size=6)
framings = st.lists(st.integers(-2, 2), min_size=3, max_size=3).map(lambda es: [t ** e for e in es])
framed = st.builds(FramedBraid, framings, letters)


def test_free_reduction():
    assert braids.free_reduce([(1, 1), (2, 1), (2, -1), (1, -1)]) == ()
    assert str(BraidWord(3, [(1, 1), (2, -1)])) == "s1 s2^-1"
    assert str(BraidWord(3)) == "1"


def test_bad_letters():
    with pytest.raises(IterantError):
        BraidWord(3, [(3, 1)])


def test_particle_normal_forms():
    ep, em, gamma = particle("e+"), particle("e-"), particle("gamma")
    assert str(ep) == "[t,t,t] s1 s2^-1"
    # constant framings are fixed by every permutation
    assert em.framing == (t ** -1,) * 3
    assert str(em.word) == "s2 s1^-1"
    assert gamma == FramedBraid.identity(3)


def test_electron_positron_annihilate():
    assert particle("e+") * particle("e-") == particle("gamma")
    assert (particle("e+") * particle("e-")).is_identity()


def test_identity_is_neutral():
    x = particle("e+")
    assert x * FramedBraid.identity(3) == x == FramedBraid.identity(3) * x


def test_sliding_framing_through_word():
    # [t^a,t^b,t^c,t^0] s1 s2 s3 times [t^d,t^e,t^f,t^0] s2 s3 on four strands.
    # left to right, (12)(23)(34) sends 1->4, 2->1, 3->2, 4->3
    a, b, c, d, e, f = (t ** k for k in (1, 2, 3, 4, 5, 6))
    x = FramedBraid([a, b, c, 1], [(1, 1), (2, 1), (3, 1)])
    y = FramedBraid([d, e, f, 1], [(2, 1), (3, 1)])
    p = x.perm()
    assert [p(k) for k in (1, 2, 3, 4)] == [4, 1, 2, 3]
    # the framing of y read through p: slot k picks y's entry at k.p
    pulled = [1, d, e, f]
    prod = fb_mul(x, y)
    assert prod.framing == tuple(u * v for u, v in zip([a, b, c, 1], pulled))
    assert str(prod.word) == "s1 s2 s3 s2 s3"


def test_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        FramedBraid.identity(3) * FramedBraid.identity(4)
    with pytest.raises(StrandMismatchError):
        FramedBraid([1, 1], [(1, 1)]) * FramedBraid.identity(3)


@given(framed, framed, framed)
def test_group_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == FramedBraid.identity(3)
    assert x.inverse() * x == FramedBraid.identity(3)


@given(framed, framed)
def test_pi_hat_multiplicative(x, y):
    assert pi_hat(x * y) == pi_hat(x) * pi_hat(y)
    assert pi_hat(x * y, z6) == pi_hat(x, z6) * pi_hat(y, z6)


@given(framed, framed)
def test_rho_multiplicative(x, y):
    assert rho(x * y, z6) == rho(x, z6) * rho(y, z6)
    assert embed_su3(x * y, z6) == embed_su3(x, z6) * embed_su3(y, z6)


@given(framed)
def test_embedding_square_commutes(x):
    assert from_matrix(rho(x, z6).to_matrix(), su3.c3()) == embed_su3(x, z6)


def test_pi_hat_examples():
    G = braids.symmetric_natural(3)
    assert pi_hat(s(1)) == Iterant.element(G, "p213")
    assert pi_hat(particle("e+"), z6) == Iterant(G, {"p312": [z6] * 3})
    assert particle("e+").perm() == Perm.from_cycles(3, [(1, 3, 2)])


def test_rho_examples():
    assert rho(s(1), z6) * rho(s(1, -1), z6) == 1
    assert rho(s(1) * s(2) * s(1), z6) - rho(s(2) * s(1) * s(2), z6) == 0
    assert rho(particle("e+"), z6) * rho(particle("e-"), z6) == 1


def test_readings():
    lhs, rhs = s(1) * s(2) * s(1), s(2) * s(1) * s(2)
    assert rho(lhs, z6, "fixed-prefix") != rho(rhs, z6, "fixed-prefix")
    assert rho(lhs, z6, "crossing-local") == rho(rhs, z6, "crossing-local")
    with pytest.raises(IterantError):
        rho(lhs, z6, "sideways")


def test_embed_examples():
    cw = su3.cartan_weyl(su3.gell_mann())
    G = su3.c3()
    P = Iterant.vector(G, [0, 0, 1]) + cw.Tp + cw.Tm
    assert embed_su3(s(1), z6) == P.scale(z6)
    assert embed_su3(particle("gamma"), zeta(5)) == 1
    assert embed_su3(particle("e+"), z6) * embed_su3(particle("e-"), z6) == 1
    with pytest.raises(StrandMismatchError):
        embed_su3(FramedBraid.identity(4))


def test_symbolic_images_keep_t():
    G = braids.symmetric_natural(3)
    assert rho(s(1)) == Iterant(G, {"p213": [t, t, t]})


def test_factorization():
    ep, em, gamma = (particle(n) for n in ("e+", "e-", "gamma"))
    assert braids.verify_factorization(gamma, [ep, em])
    assert braids.verify_factorization(ep, [ep])
    rep = braids.verify_factorization(gamma, [ep, ep])
    assert not rep
    assert rep.computed.framing == (t ** 2,) * 3
    assert "fails" in rep.report()


def test_algebra_elements():
    x = s(1) + s(2)
    assert isinstance(x, BraidAlgebraElement)
    assert (x - s(2)).single() == s(1)
    y = x * s(1, -1)
    assert y == FramedBraid.identity(3) + s(2) * s(1, -1)
    assert pi_hat(x, z6) == pi_hat(s(1), z6) + pi_hat(s(2), z6)


def test_catalogue_define_and_lookup():
    cat = braids.CATALOGUE.copy()
    fb = cat.define({"name": "mu", "strands": 3, "framing": ["t^2", "1", "t^-1"], "word": [[1, 1]]})
    assert cat.get("mu") == fb
    assert "mu" not in braids.CATALOGUE
    with pytest.raises(UnknownParticleError) as err:
        cat.get("tau")
    assert "e+" in str(err.value)
    with pytest.raises(IterantError):
        cat.define({"name": "mu", "strands": 3, "framing": ["t", "t", "t"]})
    with pytest.raises(IterantError):
        cat.define({"name": "bad"})


def test_framing_entries():
    assert braids.parse_framing_entry("t^-1") == t ** -1
    assert braids.parse_framing_entry("2 t^3") == 2 * t ** 3
    assert braids.parse_framing_entry("1") == 1
    assert braids.framing_to_text(t ** -2) == "t^-2"
    with pytest.raises(MalformedScalarError):
        braids.parse_framing_entry("q^2")


def test_catalogue_concurrent_registration():
    cat = braids.ParticleCatalogue()

    def work(k):
        cat.register(f"p{k}", FramedBraid.pure_framing([t ** k, 1, 1]))

    threads = [threading.Thread(target=work, args=(k,)) for k in range(32)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(cat.names()) == 32
