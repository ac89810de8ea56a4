"""Command-line interface.  Exit codes: 0 success, 1 a check failed, 2 bad input."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import braids, physics, serialize
from .errors import IterantError, ParseError, UnboundNameError
from .evaluator import CONTEXT_NAMES, evaluate, format_value, make_context, normalize
from .expr import parse
from .groups import builtin_group
from .iterants import Iterant, from_matrix
from .matrix import Matrix
from .scalars import Cyclotomic, LaurentPoly
from .suites import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _approx(value) -> str | None:
    """Decimal rendering of a value's numeric entries, 6 places."""
    if isinstance(value, Cyclotomic):
        return value.approx()
    if isinstance(value, Iterant):
        parts = []
        for g in sorted(value.terms):
            vec = value.terms[g]
            if not all(isinstance(x, Cyclotomic) for x in vec):
                return None
            label = "" if g == value.group.identity else value.group.label(g)
            parts.append("[" + ", ".join(x.approx() for x in vec) + "]" + label)
        return " + ".join(parts) or "0"
    if isinstance(value, Matrix):
        if not all(isinstance(x, Cyclotomic) for x in value.flatten()):
            return None
        return "; ".join("[" + ", ".join(x.approx() for x in r) + "]" for r in value.entries)
    return None


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _catalogue(args) -> braids.ParticleCatalogue:
    cat = braids.CATALOGUE.copy()
    for path in getattr(args, "defs", None) or []:
        for record in _load_records(path):
            cat.define(record)
    return cat


def _load_records(path: str) -> list:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "particles" in data:
        data = data["particles"]
    return data if isinstance(data, list) else [data]


def _evaluate(args):
    node = parse(args.expr)
    ctx = make_context(args.group, args.order, _catalogue(args), node)
    return normalize(evaluate(node, ctx)), ctx


def cmd_eval(args) -> int:
    value, ctx = _evaluate(args)
    text = format_value(value, ctx)
    approx = _approx(value)
    lines = [text] + ([f"~ {approx}"] if approx and approx != text else [])
    _emit(args, {"context": ctx.name, "order": ctx.order, "value": text,
                 "approx": approx, "exact": serialize.encode(value)}, "\n".join(lines))
    return EXIT_OK


def cmd_matrix(args) -> int:
    value, ctx = _evaluate(args)
    if isinstance(value, (Cyclotomic, LaurentPoly)):
        n = ctx.dimension or 1
        m = Matrix.identity(n).scale(value)
    elif isinstance(value, Iterant):
        m = value.to_matrix()
    elif isinstance(value, Matrix):
        m = value
    elif isinstance(value, (braids.FramedBraid, braids.BraidAlgebraElement)):
        m = braids.pi_hat(value).to_matrix()
    else:
        raise IterantError(f"no matrix image for {type(value).__name__}")
    approx = _approx(m)
    text = str(m) + (f"\n~ {approx}" if approx else "")
    _emit(args, {"matrix": serialize.encode(m), "approx": approx}, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    G = builtin_group(args.group)
    with open(args.matrix) as fh:
        m = serialize.decode_matrix(json.load(fh))
    if m.shape != (G.degree, G.degree):
        raise IterantError(f"matrix is {m.rows}x{m.cols} but {G.name} acts on {G.degree} slots")
    x = from_matrix(m, G)
    _emit(args, {"group": G.name, "iterant": str(x), "exact": serialize.encode(x)}, str(x))
    return EXIT_OK


def cmd_cayley(args) -> int:
    G = builtin_group(args.group)
    payload = {"name": G.name, "elements": list(G.elements),
               "cayley": [[G.elements[x] for x in row] for row in G.cayley],
               "action": [str(p) for p in G.action]}
    text = G.cayley_text() + "\naction:\n" + "\n".join(
        f"  {e}: {p}" for e, p in zip(G.elements, G.action))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite)
    _emit(args, report.as_dict(), report.text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_construct(args) -> int:
    named = physics.construct(args.name)
    lines = []
    for k, v in named.items():
        body = str(v)
        lines.append(f"{k} =" + ("\n" + body if "\n" in body else " " + body))
    _emit(args, {"construction": args.name, "values": {k: serialize.encode(v) for k, v in named.items()},
                 "text": {k: str(v) for k, v in named.items()}}, "\n".join(lines))
    return EXIT_OK


def cmd_particles(args) -> int:
    if args.action == "list":
        cat = _catalogue(args)
        items = cat.items()
        _emit(args, {"particles": [serialize.encode_particle(n, fb) for n, fb in items]},
              "\n".join(f"{n}: {fb}" for n, fb in items))
        return EXIT_OK
    if not args.file:
        raise IterantError("particles define needs a JSON file")
    cat = _catalogue(args)
    defined = []
    for record in _load_records(args.file):
        fb = cat.define(record)
        defined.append((str(record["name"]), fb))
    _emit(args, {"defined": [serialize.encode_particle(n, fb) for n, fb in defined]},
          "\n".join(f"defined {n}: {fb}" for n, fb in defined)
          + "\n(pass --defs FILE to other commands to use these particles)")
    return EXIT_OK


def _particle(text: str, cat: braids.ParticleCatalogue):
    """A catalogue name, or failing that a three-strand braid expression."""
    if text in cat:
        return cat.get(text)
    try:
        node = parse(text)
    except ParseError:
        return cat.get(text)  # raises the unknown-particle error listing the catalogue
    ctx = make_context("fb3", None, cat, node)
    try:
        value = normalize(evaluate(node, ctx))
    except UnboundNameError:
        return cat.get(text)
    if isinstance(value, (Cyclotomic, LaurentPoly)):
        value = braids.BraidAlgebraElement({braids.FramedBraid.identity(3): value})
    if not isinstance(value, (braids.FramedBraid, braids.BraidAlgebraElement)):
        raise IterantError(f"{text!r} is not a framed braid")
    return value


def cmd_braid(args) -> int:
    cat = _catalogue(args)
    if args.action == "mul":
        if not args.items:
            raise IterantError("braid mul needs at least one particle")
        acc = None
        for p in args.items:
            x = _particle(p, cat)
            acc = x if acc is None else acc * x
        acc = normalize(acc)
        _emit(args, {"product": str(acc), "exact": serialize.encode(acc)}, str(acc))
        return EXIT_OK
    if args.action == "verify-factorization":
        if not args.product or not args.factors:
            raise IterantError("verify-factorization needs --product and --factors")
        product = _particle(args.product, cat)
        factors = [_particle(f.strip(), cat) for f in args.factors.split(",") if f.strip()]
        if not all(isinstance(x, braids.FramedBraid) for x in [product, *factors]):
            raise IterantError("factorization checks need single framed braids")
        rep = braids.verify_factorization(product, factors)
        _emit(args, {"holds": rep.holds, "product": str(rep.product), "factors_product": str(rep.computed)},
              rep.report())
        return EXIT_OK if rep.holds else EXIT_FAIL
    if args.action == "embed":
        if not args.items:
            raise IterantError("braid embed needs a particle")
        tnode = parse(args.t)
        t = normalize(evaluate(tnode, make_context("scalar", None, None, tnode)))
        out = {}
        lines = []
        for p in args.items:
            x = _particle(p, cat)
            r = braids.rho(x, t, args.reading)
            e = braids.embed_su3(x, t, args.reading)
            out[p] = {"rho": str(r), "su3": str(e), "su3_matrix": serialize.encode(e.to_matrix())}
            lines.append(f"{p}:\n  rho       = {r}\n  su(3)     = {e}\n  matrix    =\n"
                         + "\n".join("    " + l for l in str(e.to_matrix()).splitlines()))
        _emit(args, {"t": str(t), "reading": args.reading, "images": out}, "\n".join(lines))
        return EXIT_OK
    raise IterantError(f"unknown braid action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iterant", description="Exact iterant algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, defs=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if defs:
            sp.add_argument("--defs", action="append", metavar="FILE",
                            help="JSON particle definitions to load first (repeatable)")

    for name, fn, helptext in (("eval", cmd_eval, "evaluate an expression"),
                               ("matrix", cmd_matrix, "evaluate and print the matrix image")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("-g", "--group", default="scalar",
                        help="context: " + ", ".join(CONTEXT_NAMES))
        sp.add_argument("-N", "--order", type=int, default=None,
                        help="scalar order N, the field is Q(zeta_N); default lcm(12, roots used)")
        sp.add_argument("expr")
        common(sp, defs=True)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("decompose", help="write a matrix as an iterant over a group")
    sp.add_argument("--group", required=True)
    sp.add_argument("--matrix", required=True, metavar="FILE")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("cayley", help="print a group's Cayley table")
    sp.add_argument("group")
    common(sp)
    sp.set_defaults(func=cmd_cayley)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help="core, matrix-iso, quaternions, fermion, majorana, parafermion:n, su3, braids")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("construct", help="print a named construction")
    sp.add_argument("name", help=", ".join(sorted(physics.CONSTRUCTIONS)) + ", parafermion:n, minkowski(T,X,Y,Z)")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("particles", help="list or define framed-braid particles")
    sp.add_argument("action", choices=["list", "define"])
    sp.add_argument("file", nargs="?")
    common(sp, defs=True)
    sp.set_defaults(func=cmd_particles)

    sp = sub.add_parser("braid", help="framed braid operations")
    sp.add_argument("action", choices=["mul", "verify-factorization", "embed"])
    sp.add_argument("items", nargs="*", help="particle names or braid expressions")
    sp.add_argument("--product")
    sp.add_argument("--factors", help="comma-separated factors")
    sp.add_argument("--t", default="zeta(6,1)", help="value of the framing variable")
    sp.add_argument("--reading", default="constant", choices=list(braids.READINGS))
    common(sp, defs=True)
    sp.set_defaults(func=cmd_braid)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # positionals given after options, e.g. braid embed --t zeta(6,1) e+
        if args.command == "braid" and not any(x.startswith("--") for x in extra):
            args.items = list(args.items) + extra
        else:
            parser.error("unrecognized arguments: " + " ".join(extra))
    try:
        return args.func(args)
    except (IterantError, OSError, json.JSONDecodeError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": str(msg)}))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
