"""JSON encodings for scalars, groups, iterants, matrices and framed braids."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .braids import BraidAlgebraElement, BraidWord, FramedBraid, framing_to_text, parse_framing_entry
from .errors import IterantError, MalformedScalarError
from .groups import Group, Perm
from .iterants import Iterant
from .matrix import Matrix
from .scalars import Cyclotomic, LaurentPoly, as_scalar

__all__ = [
    "encode",
    "decode_scalar",
    "decode_group",
    "decode_iterant",
    "decode_matrix",
    "decode_particle",
    "encode_particle",
    "dumps",
]


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def encode_cyclotomic(c: Cyclotomic) -> dict:
    m = c.minimal()
    return {"order": m.order, "coeffs": [_frac(x) for x in m.coeffs]}


def encode_laurent(p: LaurentPoly) -> dict:
    return {"terms": {str(e): encode_cyclotomic(c) for e, c in sorted(p.terms.items())}}


def encode_scalar(x) -> dict:
    x = as_scalar(x)
    if isinstance(x, LaurentPoly):
        return encode_laurent(x)
    return encode_cyclotomic(x)


def encode_group(G: Group) -> dict:
    out = {"name": G.name, "elements": list(G.elements), "cayley": [list(r) for r in G.cayley]}
    if not G.is_regular_action():
        out["action"] = [p.one_based() for p in G.action]
    return out


def encode_iterant(x: Iterant) -> dict:
    return {
        "group": encode_group(x.group),
        "terms": [
            {"elem": x.group.label(g), "vector": [encode_scalar(v) for v in vec]}
            for g, vec in sorted(x.terms.items())
        ],
    }


def encode_matrix(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[encode_scalar(a) for a in r] for r in m.entries],
    }


def encode_particle(name: str, fb: FramedBraid) -> dict:
    return {
        "name": name,
        "strands": fb.strands,
        "framing": [framing_to_text(v) for v in fb.framing],
        "word": [[k, s] for k, s in fb.word.letters],
    }


def encode(obj) -> Any:
    """JSON-ready structure for any value the library produces."""
    if isinstance(obj, (Cyclotomic, LaurentPoly, int, Fraction)):
        return encode_scalar(obj)
    if isinstance(obj, Iterant):
        return encode_iterant(obj)
    if isinstance(obj, Matrix):
        return encode_matrix(obj)
    if isinstance(obj, FramedBraid):
        return {
            "strands": obj.strands,
            "framing": [framing_to_text(v) for v in obj.framing],
            "word": [[k, s] for k, s in obj.word.letters],
        }
    if isinstance(obj, BraidAlgebraElement):
        return {"terms": [{"coeff": encode_scalar(c), "braid": encode(fb)} for fb, c in sorted(
            obj.terms.items(), key=lambda kv: str(kv[0]))]}
    if isinstance(obj, Group):
        return encode_group(obj)
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def dumps(obj, **kw) -> str:
    kw.setdefault("indent", 2)
    kw.setdefault("sort_keys", False)
    return json.dumps(encode(obj), **kw)


# -- decoding ----------------------------------------------------------------


def decode_scalar(data, order: int | None = None):
    """Accepts the encoded dicts, ints, and strings such as ``3/4``, ``i`` or ``zeta(12,1)``."""
    if isinstance(data, bool):
        raise MalformedScalarError(f"not a scalar: {data!r}")
    if isinstance(data, int):
        return as_scalar(data)
    if isinstance(data, str):
        try:
            return as_scalar(data)
        except (MalformedScalarError, ValueError):
            from .evaluator import eval_text

            val = eval_text(data, "scalar", order)
            if not isinstance(val, (Cyclotomic, LaurentPoly)):
                raise MalformedScalarError(f"{data!r} is not a scalar")
            return val
    if isinstance(data, dict) and "terms" in data:
        return LaurentPoly({int(e): decode_scalar(c) for e, c in data["terms"].items()})
    if isinstance(data, dict) and "order" in data:
        try:
            coeffs = [Fraction(str(c)) for c in data["coeffs"]]
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise MalformedScalarError(f"bad cyclotomic record {data!r}") from exc
        return Cyclotomic(int(data["order"]), coeffs)
    raise MalformedScalarError(f"not a scalar: {data!r}")


def decode_group(data) -> Group:
    if isinstance(data, str):
        from .groups import builtin_group

        return builtin_group(data)
    action = None
    if "action" in data:
        action = [Perm.from_one_based(p) for p in data["action"]]
    return Group(data["elements"], data["cayley"], action, name=data.get("name"))


def decode_iterant(data) -> Iterant:
    G = decode_group(data["group"])
    return Iterant(G, {t["elem"]: [decode_scalar(v) for v in t["vector"]] for t in data["terms"]})


def decode_matrix(data) -> Matrix:
    if isinstance(data, list):
        rows = data
    else:
        rows = data["entries"]
    try:
        m = Matrix([[decode_scalar(a) for a in r] for r in rows])
    except ValueError as exc:
        if isinstance(exc, IterantError):
            raise
        raise IterantError(f"malformed matrix: {exc}") from exc
    if isinstance(data, dict):
        if data.get("rows", m.rows) != m.rows or data.get("cols", m.cols) != m.cols:
            raise IterantError("declared matrix shape does not match its entries")
    return m


def decode_particle(data) -> tuple[str, FramedBraid]:
    strands = int(data["strands"])
    framing = [parse_framing_entry(x) for x in data["framing"]]
    word = BraidWord(strands, [tuple(l) for l in data.get("word", [])])
    return str(data["name"]), FramedBraid(framing, word)
