"""
Evaluation of parsed expressions inside a named context, and printing of the
results in a form the parser reads back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .braids import CATALOGUE, BraidAlgebraElement, FramedBraid, ParticleCatalogue
from .errors import EvalError, IterantError, MissingRootError, UnboundNameError
from .expr import Bracket, Name, Neg, Node, Num, Power, Product, Sum, Vector, Zeta, parse, required_orders
from .groups import Group, builtin_group, cyclic, klein4, symmetric
from .iterants import Iterant, basic_idempotent
from .matrix import Matrix
from .scalars import Cyclotomic, LaurentPoly, as_scalar, sqrt3, zeta

__all__ = [
    "Context",
    "make_context",
    "CONTEXT_NAMES",
    "evaluate",
    "eval_text",
    "normalize",
    "format_value",
    "default_order",
]

_SCALARS = (Cyclotomic, LaurentPoly)


@dataclass
class Context:
    """Everything a name can resolve to, plus how vector literals are read.

    ``vectors`` is one of ``iterant`` (diagonal iterant over ``group``),
    ``matrix`` (diagonal matrix), ``framing`` (framed braid with empty word)
    or ``None`` (vectors not allowed).
    """

    name: str
    order: int
    group: Group | None = None
    vectors: str | None = None
    dimension: int = 0
    bindings: dict[str, object] = field(default_factory=dict)
    catalogue: ParticleCatalogue | None = None
    matrix_units: dict[str, tuple[int, int]] = field(default_factory=dict)

    def bind(self, name: str, value) -> None:
        self.bindings[name] = value

    def lookup(self, node: Name):
        if node.name in self.bindings:
            v = self.bindings[node.name]
            return v() if callable(v) else v
        if node.name == "i":
            return self.root(4, 1, node)
        if node.name == "w":
            return self.root(3, 1, node)
        if node.name == "sqrt3":
            self.root(12, 1, node)
            return sqrt3()
        if node.name == "t":
            return LaurentPoly.monomial(1)
        raise UnboundNameError(
            f"unbound name {node.name!r} at line {node.line}, column {node.col} "
            f"in context {self.name}"
        )

    def root(self, n: int, k: int, node: Node | None = None) -> Cyclotomic:
        if self.order % n:
            where = f" at line {node.line}, column {node.col}" if node else ""
            raise MissingRootError(
                f"zeta({n},{k}) needs scalar order divisible by {n}, context has N = {self.order}{where}"
            )
        return zeta(n, k)


def _lazy(fn: Callable[[], object]):
    cache = []

    def get():
        if not cache:
            cache.append(fn())
        return cache[0]

    return get


def _bind_group_labels(ctx: Context, G: Group) -> None:
    for g, label in enumerate(G.elements):
        if label.isidentifier():
            ctx.bind(label, Iterant.element(G, g))


def _iterant_context(name: str, G: Group, order: int) -> Context:
    ctx = Context(name, order, group=G, vectors="iterant", dimension=G.degree)
    _bind_group_labels(ctx, G)
    return ctx


def _need(order: int, n: int, what: str):
    if order % n:
        raise MissingRootError(f"{what} needs scalar order divisible by {n}, context has N = {order}")


def _ctx_c2(order: int) -> Context:
    from .physics import eta_group

    G = eta_group()
    ctx = _iterant_context("c2", G, order)
    h = Iterant.element(G, "h")
    eps = Iterant.vector(G, [1, -1])
    for n in ("h", "eta"):
        ctx.bind(n, h)
    for n in ("e", "eps"):
        ctx.bind(n, eps)
    ctx.bind("e1", basic_idempotent(G, 1))
    ctx.bind("e2", basic_idempotent(G, 2))
    return ctx


def _ctx_c3(order: int) -> Context:
    from . import su3

    G = su3.c3()
    ctx = _iterant_context("c3", G, order)
    ctx.bind("S", Iterant.element(G, "A"))

    def gm():
        _need(order, 12, "the su(3) generators")
        return su3.gell_mann(12)

    gm = _lazy(gm)
    for a in range(1, 9):
        ctx.bind(f"l{a}", _lazy(lambda a=a: gm()[a]))
        ctx.bind(f"lambda{a}", _lazy(lambda a=a: gm()[a]))
        ctx.bind(f"F{a}", _lazy(lambda a=a: gm().F[a - 1]))
    cw_names = ["Tp", "Tm", "Up", "Um", "Vp", "Vm", "T3", "Y"]
    cw = _lazy(lambda: su3.cartan_weyl(gm()))
    for k, n in enumerate(cw_names):
        ctx.bind(n, _lazy(lambda k=k: cw()[k]))
    P, Q, R = su3.transposition_embedding()
    ctx.bind("P", P)
    ctx.bind("Q", Q)
    ctx.bind("R", R)
    return ctx


def _ctx_cyclic(n: int, order: int) -> Context:
    return _iterant_context(f"c{n}", cyclic(n), order)


def _ctx_klein(order: int) -> Context:
    from .physics import quaternions_klein

    ctx = _iterant_context("klein4", klein4(), order)
    q = quaternions_klein()
    ctx.bind("I", q.I)
    ctx.bind("J", q.J)
    ctx.bind("K", q.K)
    return ctx


def _ctx_s3(order: int) -> Context:
    G = symmetric(3, natural=True)
    ctx = _iterant_context("s3", G, order)
    P = Iterant.element(G, "p213")
    Q = Iterant.element(G, "p132")
    R = Iterant.element(G, "p321")
    for n, v in (("P", P), ("Q", Q), ("R", R), ("T1", P), ("T2", Q), ("A", Q * P), ("B", P * Q)):
        ctx.bind(n, v)
    return ctx


def _ctx_s4(order: int) -> Context:
    from .physics import SIGNED_PERM_LABELS, quaternions_signed_perm

    G = symmetric(4, natural=True)
    ctx = _iterant_context("s4", G, order)
    for n, label in SIGNED_PERM_LABELS.items():
        ctx.bind(n, Iterant.element(G, label))
    q = quaternions_signed_perm()
    ctx.bind("I", q.I)
    ctx.bind("J", q.J)
    ctx.bind("K", q.K)
    return ctx


def _ctx_pauli(order: int) -> Context:
    from .physics import fermion_ops, pauli_ops, projector_basis

    ctx = Context("pauli", order, vectors="matrix", dimension=2)
    b = projector_basis(2)
    units = {"P": (0, 0), "Q": (1, 1), "R": (0, 1), "S": (1, 0)}
    for n, (p, q) in units.items():
        ctx.bind(n, b(p, q))
    ctx.matrix_units = units

    def ops():
        _need(order, 4, "the Pauli operators")
        return pauli_ops()

    ops = _lazy(ops)
    for k, n in enumerate(("X", "Y", "Z", "Sx", "Sy", "Sz")):
        ctx.bind(n, _lazy(lambda k=k: ops()[k]))
    f = fermion_ops()
    ctx.bind("c", f.c)
    ctx.bind("cdag", f.cdag)
    ctx.bind("N", f.N)
    return ctx


def _ctx_fb(n: int, order: int, catalogue: ParticleCatalogue | None) -> Context:
    cat = catalogue or CATALOGUE
    ctx = Context(f"fb{n}", order, vectors="framing", dimension=n, catalogue=cat)
    for k in range(1, n):
        ctx.bind(f"s{k}", FramedBraid.generator(n, k))
    aliases = {"e+": "ep", "e-": "em"}
    for pname, fb in cat.items():
        if fb.strands != n:
            continue
        ident = aliases.get(pname, pname)
        if ident.isidentifier():
            ctx.bind(ident, fb)
    return ctx


CONTEXT_NAMES = ["scalar", "c2", "c3", "cN", "klein4", "s3", "s4", "pauli", "fb3", "fbN", "<group name>"]


def default_order(node: Node | None = None) -> int:
    n = 12
    if node is not None:
        for m in required_orders(node):
            n = n * m // math.gcd(n, m)
    return n


def make_context(name: str, order: int | None = None, catalogue: ParticleCatalogue | None = None,
                 node: Node | None = None) -> Context:
    """Build a named context.  ``order`` defaults to lcm(12, roots used by ``node``)."""
    order = default_order(node) if order is None else int(order)
    if order < 1:
        raise EvalError(f"scalar order must be positive, got {order}")
    key = name.strip().lower()
    if key in ("scalar", "none", ""):
        return Context("scalar", order)
    if key in ("c2", "eta"):
        return _ctx_c2(order)
    if key == "c3":
        return _ctx_c3(order)
    if key in ("klein4", "k4", "v4"):
        return _ctx_klein(order)
    if key == "s3":
        return _ctx_s3(order)
    if key == "s4":
        return _ctx_s4(order)
    if key == "pauli":
        return _ctx_pauli(order)
    if key.startswith("fb") and key[2:].isdigit():
        return _ctx_fb(int(key[2:]), order, catalogue)
    if key.startswith("c") and key[1:].isdigit():
        return _ctx_cyclic(int(key[1:]), order)
    try:
        G = builtin_group(name)
    except IterantError as exc:
        raise EvalError(
            f"unknown context {name!r}; known: {', '.join(CONTEXT_NAMES)}"
        ) from exc
    return _iterant_context(G.name, G, order)


# -- evaluation --------------------------------------------------------------


def _is_scalar(v) -> bool:
    return isinstance(v, _SCALARS)


def _lift(s, like, ctx: Context):
    """Promote scalar ``s`` into the algebra of ``like``."""
    if isinstance(like, Iterant):
        return Iterant.scalar(like.group, s)
    if isinstance(like, Matrix):
        return Matrix.identity(like.rows).scale(s)
    if isinstance(like, (FramedBraid, BraidAlgebraElement)):
        n = like.strands if isinstance(like, FramedBraid) else next(iter(like.terms)).strands
        return BraidAlgebraElement({FramedBraid.identity(n): s})
    raise EvalError(f"cannot combine a scalar with {type(like).__name__}")


def _add(a, b, ctx: Context):
    if _is_scalar(a) and _is_scalar(b):
        return a + b
    if _is_scalar(a):
        a = _lift(a, b, ctx)
    if _is_scalar(b):
        b = _lift(b, a, ctx)
    if isinstance(b, BraidAlgebraElement) and not b.terms:
        return a
    if isinstance(a, BraidAlgebraElement) and not a.terms:
        return b
    try:
        out = a + b
    except IterantError:
        raise
    except (TypeError, ValueError) as exc:
        raise EvalError(f"cannot add {type(a).__name__} and {type(b).__name__}: {exc}") from exc
    if out is NotImplemented:
        raise EvalError(f"cannot add {type(a).__name__} and {type(b).__name__}")
    return out


def _neg(a):
    return -a


def _mul(a, b, ctx: Context):
    if _is_scalar(a) and _is_scalar(b):
        return a * b
    if _is_scalar(a):
        a, b = b, a
        if isinstance(a, Iterant):
            return a.scale(b)
        if isinstance(a, Matrix):
            return a.scale(b)
        return a * b
    if _is_scalar(b):
        if isinstance(a, (Iterant, Matrix)):
            return a.scale(b)
        return a * b
    try:
        out = a * b
    except IterantError:
        raise
    except (TypeError, ValueError) as exc:
        raise EvalError(f"cannot multiply {type(a).__name__} by {type(b).__name__}: {exc}") from exc
    if out is NotImplemented:
        raise EvalError(f"cannot multiply {type(a).__name__} by {type(b).__name__}")
    return out


def _pow(a, k: int, ctx: Context):
    if k >= 0:
        out = None
        for _ in range(k):
            out = a if out is None else _mul(out, a, ctx)
        return as_scalar(1) if out is None else out
    if _is_scalar(a):
        if not a:
            raise EvalError("zero has no inverse")
        return a ** k
    if isinstance(a, BraidAlgebraElement):
        single = a.single()
        if single is None:
            raise EvalError("only single framed braids can be inverted")
        a = single
    try:
        inv = a.inverse()
    except ZeroDivisionError as exc:
        raise EvalError(f"element is not invertible: {exc}") from exc
    return _pow(inv, -k, ctx)


def _vector(items: list, ctx: Context, node: Node):
    for v in items:
        if not _is_scalar(v):
            raise EvalError(
                f"vector entries must be scalars (line {node.line}, column {node.col})"
            )
    if ctx.vectors is None:
        raise EvalError(f"vector literals need a group context (line {node.line}, column {node.col})")
    if len(items) != ctx.dimension:
        raise EvalError(
            f"vector of length {len(items)} in a degree-{ctx.dimension} context "
            f"(line {node.line}, column {node.col})"
        )
    if ctx.vectors == "iterant":
        return Iterant.vector(ctx.group, items)
    if ctx.vectors == "matrix":
        return Matrix.diag(items)
    return FramedBraid.pure_framing(items)


def evaluate(node: Node, ctx: Context):
    """Exact value of ``node`` in ``ctx`` (not normalised)."""
    if isinstance(node, Num):
        return Cyclotomic.rational(node.value)
    if isinstance(node, Zeta):
        if ctx.order % node.order:
            raise MissingRootError(
                f"zeta({node.order},{node.k}) needs scalar order divisible by {node.order}, "
                f"context has N = {ctx.order} (line {node.line}, column {node.col})"
            )
        return zeta(node.order, node.k)
    if isinstance(node, Name):
        return ctx.lookup(node)
    if isinstance(node, Vector):
        return _vector([normalize(evaluate(x, ctx)) for x in node.items], ctx, node)
    if isinstance(node, Neg):
        return _neg(evaluate(node.arg, ctx))
    if isinstance(node, Sum):
        acc = None
        for sign, term in node.terms:
            v = evaluate(term, ctx)
            if sign < 0:
                v = _neg(v)
            acc = v if acc is None else _add(acc, v, ctx)
        return acc
    if isinstance(node, Product):
        acc = evaluate(node.factors[0], ctx)
        for f in node.factors[1:]:
            acc = _mul(acc, evaluate(f, ctx), ctx)
        return acc
    if isinstance(node, Power):
        return _pow(evaluate(node.base, ctx), node.exponent, ctx)
    if isinstance(node, Bracket):
        a = evaluate(node.left, ctx)
        b = evaluate(node.right, ctx)
        ab, ba = _mul(a, b, ctx), _mul(b, a, ctx)
        return _add(ab, _neg(ba), ctx) if node.kind == "comm" else _add(ab, ba, ctx)
    raise EvalError(f"unknown node {type(node).__name__}")


def normalize(value):
    """Collapse multiples of the unit to scalars and constant polynomials to numbers."""
    if isinstance(value, LaurentPoly) and value.is_constant():
        return value.constant_value()
    if isinstance(value, Iterant) and value.is_scalar():
        return normalize(value.scalar_value())
    if isinstance(value, Matrix) and value.is_square():
        d = value.entries[0][0] if value.rows else as_scalar(0)
        if value == Matrix.identity(value.rows).scale(d):
            return normalize(d)
    if isinstance(value, BraidAlgebraElement):
        if not value.terms:
            return as_scalar(0)
        single = value.single()
        if single is not None:
            return single
    return value


def eval_text(text: str, context: str | Context = "scalar", order: int | None = None,
              catalogue: ParticleCatalogue | None = None):
    node = parse(text)
    ctx = context if isinstance(context, Context) else make_context(context, order, catalogue, node)
    return normalize(evaluate(node, ctx))


# -- printing ----------------------------------------------------------------


def _coeff_prefix(c) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    s = str(c)
    if isinstance(c, Cyclotomic) and c.is_rational():
        return s + " "
    return f"({s}) "


def format_value(value, ctx: Context | None = None) -> str:
    """Bracket-notation text that parses back to ``value`` in ``ctx``."""
    value = normalize(value)
    if isinstance(value, Matrix) and ctx is not None and ctx.matrix_units:
        parts = []
        for name, (p, q) in ctx.matrix_units.items():
            c = value[p, q]
            if c:
                parts.append(_coeff_prefix(c) + name)
        return " + ".join(parts).replace("+ -", "- ") or "0"
    return str(value)
