"""
The small expression language used by the command line.

Grammar (juxtaposition is multiplication)::

    expr   := term (("+" | "-") term)*
    term   := "-"* product
    product:= factor (["*"] factor)*
    factor := base ("^" ["-"] int)?
    base   := scalar | vector | name | "comm(" expr "," expr ")"
            | "acomm(" expr "," expr ")" | "{" expr "," expr "}" | "(" expr ")"
    vector := "[" expr ("," expr)* "]"
    scalar := rational | "zeta(" int "," int ")"

``i``, ``w`` and ``t`` are ordinary names with built-in scalar meanings that a
context may override.  Lines are 1-based, columns are 0-based offsets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import ParseError

__all__ = [
    "Token",
    "tokenize",
    "Num",
    "Zeta",
    "Name",
    "Vector",
    "Neg",
    "Sum",
    "Product",
    "Power",
    "Bracket",
    "parse",
    "required_orders",
]


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, NAME, OP, EOF
    text: str
    line: int
    col: int


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()\[\]{},])"
)


def tokenize(text: str) -> list[Token]:
    out = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "num":
            # a dangling slash or a zero denominator is a malformed rational
            after = text[m.end():m.end() + 1]
            if after == "/":
                raise ParseError("malformed rational", line, col, ["digits after '/'"])
            if "/" in tok and int(tok.split("/")[1]) == 0:
                raise ParseError("malformed rational: zero denominator", line, col)
            out.append(Token("NUM", tok, line, col))
        elif kind == "name":
            out.append(Token("NAME", tok, line, col))
        elif kind == "op":
            out.append(Token("OP", tok, line, col))
        pos = m.end()
    out.append(Token("EOF", "", line, pos - line_start))
    return out


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    line: int = field(default=1, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Num(Node):
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class Zeta(Node):
    order: int = 1
    k: int = 1


@dataclass(frozen=True)
class Name(Node):
    name: str = ""


@dataclass(frozen=True)
class Vector(Node):
    items: tuple = ()


@dataclass(frozen=True)
class Neg(Node):
    arg: Node = None


@dataclass(frozen=True)
class Sum(Node):
    """terms is a tuple of (sign, node) with sign in {+1, -1}."""

    terms: tuple = ()


@dataclass(frozen=True)
class Product(Node):
    factors: tuple = ()


@dataclass(frozen=True)
class Power(Node):
    base: Node = None
    exponent: int = 1


@dataclass(frozen=True)
class Bracket(Node):
    kind: str = "comm"  # comm or acomm
    left: Node = None
    right: Node = None


# -- parser ------------------------------------------------------------------

_BASE_START = ["number", "name", "'['", "'('", "'{'", "'zeta('", "'comm('", "'acomm('"]


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def error(self, message: str, expected=(), tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, expected)

    def is_op(self, text: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def expect(self, text: str, opener: Token | None = None) -> Token:
        if self.is_op(text):
            return self.advance()
        if self.tok.kind == "EOF" and opener is not None:
            self.error(f"unbalanced {opener.text!r} opened at column {opener.col}", [repr(text)])
        found = "end of input" if self.tok.kind == "EOF" else repr(self.tok.text)
        self.error(f"unexpected {found}", [repr(text)])

    def parse(self) -> Node:
        if self.tok.kind == "EOF":
            self.error("empty expression", _BASE_START)
        node = self.expr()
        if self.tok.kind != "EOF":
            t = self.tok
            if t.kind == "OP" and t.text in ")]}":
                self.error(f"unbalanced {t.text!r}", ["'+'", "'-'", "end of input"])
            self.error(f"unexpected {t.text!r}", ["'+'", "'-'", "'*'", "'^'", "end of input"])
        return node

    def expr(self) -> Node:
        start = self.tok
        terms = [(1, self.term())]
        while self.is_op("+") or self.is_op("-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1:
            return terms[0][1]
        return Sum(start.line, start.col, tuple(terms))

    def term(self) -> Node:
        start = self.tok
        negs = 0
        while self.is_op("-"):
            self.advance()
            negs += 1
        node = self.product()
        for _ in range(negs):
            node = Neg(start.line, start.col, node)
        return node

    def _starts_base(self) -> bool:
        t = self.tok
        return t.kind in ("NUM", "NAME") or (t.kind == "OP" and t.text in "([{")

    def product(self) -> Node:
        start = self.tok
        factors = [self.factor()]
        while True:
            if self.is_op("*"):
                self.advance()
                factors.append(self.factor())
            elif self._starts_base():
                factors.append(self.factor())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Product(start.line, start.col, tuple(factors))

    def factor(self) -> Node:
        start = self.tok
        base = self.base()
        if self.is_op("^"):
            self.advance()
            sign = 1
            if self.is_op("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "NUM" or "/" in self.tok.text:
                self.error("exponent must be an integer", ["integer"])
            k = sign * int(self.advance().text)
            return Power(start.line, start.col, base, k)
        return base

    def _int(self) -> int:
        neg = False
        if self.is_op("-"):
            self.advance()
            neg = True
        if self.tok.kind != "NUM" or "/" in self.tok.text:
            self.error("expected an integer", ["integer"])
        v = int(self.advance().text)
        return -v if neg else v

    def base(self) -> Node:
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return Num(t.line, t.col, Fraction(t.text))
        if t.kind == "NAME":
            nxt = self.toks[self.pos + 1]
            call = nxt.kind == "OP" and nxt.text == "("
            if t.text == "zeta" and call:
                self.advance()
                opener = self.advance()
                n = self._int()
                self.expect(",", opener)
                k = self._int()
                self.expect(")", opener)
                if n < 1:
                    self.error("zeta order must be positive", tok=t)
                return Zeta(t.line, t.col, n, k)
            if t.text in ("comm", "acomm") and call:
                self.advance()
                opener = self.advance()
                left = self.expr()
                self.expect(",", opener)
                right = self.expr()
                self.expect(")", opener)
                return Bracket(t.line, t.col, t.text, left, right)
            self.advance()
            return Name(t.line, t.col, t.text)
        if t.kind == "OP" and t.text == "(":
            opener = self.advance()
            node = self.expr()
            self.expect(")", opener)
            return node
        if t.kind == "OP" and t.text == "[":
            opener = self.advance()
            items = [self.expr()]
            while self.is_op(","):
                self.advance()
                items.append(self.expr())
            self.expect("]", opener)
            return Vector(t.line, t.col, tuple(items))
        if t.kind == "OP" and t.text == "{":
            opener = self.advance()
            left = self.expr()
            self.expect(",", opener)
            right = self.expr()
            self.expect("}", opener)
            return Bracket(t.line, t.col, "acomm", left, right)
        if t.kind == "EOF":
            self.error("unexpected end of input", _BASE_START)
        self.error(f"unexpected {t.text!r}", _BASE_START)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST or raise a positioned :class:`ParseError`."""
    return _Parser(text).parse()


def walk(node: Node) -> Iterator[Node]:
    yield node
    if isinstance(node, Vector):
        for x in node.items:
            yield from walk(x)
    elif isinstance(node, Neg):
        yield from walk(node.arg)
    elif isinstance(node, Sum):
        for _, x in node.terms:
            yield from walk(x)
    elif isinstance(node, Product):
        for x in node.factors:
            yield from walk(x)
    elif isinstance(node, Power):
        yield from walk(node.base)
    elif isinstance(node, Bracket):
        yield from walk(node.left)
        yield from walk(node.right)


def required_orders(node: Node) -> set[int]:
    """Roots of unity an expression mentions explicitly."""
    out = set()
    for n in walk(node):
        if isinstance(n, Zeta):
            out.add(n.order)
        elif isinstance(n, Name) and n.name == "i":
            out.add(4)
        elif isinstance(n, Name) and n.name == "w":
            out.add(3)
        elif isinstance(n, Name) and n.name == "sqrt3":
            out.add(12)
    return out
