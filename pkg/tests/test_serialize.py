import json

import pytest
from hypothesis import given

from iterant import serialize
from iterant.braids import particle
from iterant.errors import IterantError, MalformedScalarError
from iterant.groups import cyclic, klein4, symmetric
from iterant.iterants import Iterant
from iterant.matrix import Matrix
from iterant.scalars import LaurentPoly, sqrt3, zeta

from conftest import cyclotomics, iterants


def test_cyclotomic_encoding():
    assert serialize.encode(zeta(12, 4)) == {"order": 3, "coeffs": ["0/1", "1/1"]}
    # zeta^5 = zeta^3 - zeta mod x^4 - x^2 + 1, so sqrt3 / 2 = zeta - zeta^3 / 2
    assert serialize.encode(sqrt3() / 2) == {"order": 12, "coeffs": ["0/1", "1/1", "0/1", "-1/2"]}


def test_laurent_encoding():
    t = LaurentPoly.monomial(1)
    enc = serialize.encode(t ** -1 + 2)
    assert enc == {"terms": {"-1": {"order": 1, "coeffs": ["1/1"]}, "0": {"order": 1, "coeffs": ["2/1"]}}}
    assert serialize.decode_scalar(enc) == t ** -1 + 2


def test_decode_scalar_forms():
    assert serialize.decode_scalar(3) == 3
    assert serialize.decode_scalar("3/4") * 4 == 3
    assert serialize.decode_scalar("i") == zeta(4)
    assert serialize.decode_scalar("zeta(12,1) - zeta(12,5)") == sqrt3()
    for bad in (True, None, "[1,2]", {"order": 4, "coeffs": ["1/0"]}):
        with pytest.raises((MalformedScalarError, IterantError)):
            serialize.decode_scalar(bad)


@given(cyclotomics())
def test_scalar_round_trip(c):
    text = json.dumps(serialize.encode(c))
    assert serialize.decode_scalar(json.loads(text)) == c


@pytest.mark.parametrize("G", [cyclic(3), klein4(), symmetric(3, natural=True)], ids=lambda G: f"{G.name}-{G.degree}")
def test_iterant_round_trip(G):
    @given(iterants(G))
    def check(x):
        data = json.loads(serialize.dumps(x))
        assert serialize.decode_iterant(data) == x

    check()


def test_group_encoding_keeps_natural_action():
    G = symmetric(3, natural=True)
    enc = serialize.encode(G)
    assert "action" in enc
    assert serialize.decode_group(enc) == G
    assert "action" not in serialize.encode(cyclic(3))
    assert serialize.decode_group("klein4") == klein4()


def test_matrix_round_trip_and_shape_check():
    m = Matrix([[1, zeta(4)], [0, "1/2"]])
    assert serialize.decode_matrix(serialize.encode(m)) == m
    assert serialize.decode_matrix([[1, 2], [3, 4]]) == Matrix([[1, 2], [3, 4]])
    with pytest.raises(IterantError):
        serialize.decode_matrix({"rows": 3, "cols": 2, "entries": [[1, 2], [3, 4]]})
    with pytest.raises(IterantError):
        serialize.decode_matrix([[1, 2], [3]])


def test_particle_round_trip():
    ep = particle("e+")
    enc = serialize.encode_particle("e+", ep)
    assert enc == {"name": "e+", "strands": 3, "framing": ["t^1", "t^1", "t^1"], "word": [[1, 1], [2, -1]]}
    assert serialize.decode_particle(enc) == ("e+", ep)


def test_iterant_encoding_labels():
    x = Iterant(cyclic(2, generator="h"), {"h": [1, -1]})
    enc = serialize.encode(x)
    assert enc["terms"] == [{"elem": "h", "vector": [{"order": 1, "coeffs": ["1/1"]}, {"order": 1, "coeffs": ["-1/1"]}]}]
