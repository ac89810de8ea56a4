"""
Framed braids, their algebra, and maps into iterant algebras over S_n.

A framed braid is a framing vector (one Laurent polynomial in t per strand)
followed by a braid word.  Normal form keeps the framing on the left: moving a
framing vector leftward through a crossing permutes its slots, using the same
slot convention as iterant multiplication so that the maps below are algebra
homomorphisms.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    IterantError,
    MalformedScalarError,
    StrandMismatchError,
    UnknownParticleError,
)
from .groups import Group, Perm, symmetric, vector_pull
from .iterants import Iterant
from .scalars import Cyclotomic, LaurentPoly, as_scalar

__all__ = [
    "BraidWord",
    "FramedBraid",
    "fb_mul",
    "BraidAlgebraElement",
    "ParticleCatalogue",
    "CATALOGUE",
    "particle",
    "parse_framing_entry",
    "FactorizationReport",
    "verify_factorization",
    "symmetric_natural",
    "pi_hat",
    "rho",
    "READINGS",
    "embed_su3",
]

T = LaurentPoly.monomial(1)


# -- braid words -------------------------------------------------------------


def free_reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for k, s in letters:
        if stack and stack[-1] == (k, -s):
            stack.pop()
        else:
            stack.append((k, s))
    return tuple(stack)


class BraidWord:
    """A word in the Artin generators sigma_1 .. sigma_{n-1} and their inverses."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands: int, letters: Iterable[Sequence[int]] = (), reduce: bool = True):
        if strands < 1:
            raise IterantError(f"a braid needs at least one strand, got {strands}")
        clean = []
        for k, s in letters:
            k, s = int(k), int(s)
            if not 1 <= k < strands:
                raise StrandMismatchError(f"sigma_{k} does not exist on {strands} strands")
            if s not in (1, -1):
                raise IterantError(f"letter sign must be +1 or -1, got {s}")
            clean.append((k, s))
        self.strands = strands
        self.letters = free_reduce(clean) if reduce else tuple(clean)

    @classmethod
    def generator(cls, strands: int, k: int, sign: int = 1) -> "BraidWord":
        return cls(strands, [(k, sign)])

    def _check(self, other: "BraidWord"):
        if self.strands != other.strands:
            raise StrandMismatchError(
                f"cannot combine braids on {self.strands} and {other.strands} strands"
            )

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, [(k, -s) for k, s in reversed(self.letters)])

    def perm(self) -> Perm:
        """Underlying permutation; sigma_k and its inverse both map to (k k+1)."""
        out = Perm.identity(self.strands)
        for k, _ in self.letters:
            out = out * Perm.from_cycles(self.strands, [(k, k + 1)])
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, BraidWord)
            and self.strands == other.strands
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{k}" if s == 1 else f"s{k}^-1" for k, s in self.letters)

    def __repr__(self):
        return f"BraidWord({self.strands}, {list(self.letters)})"


# -- framed braids -----------------------------------------------------------


def _laurent(x) -> LaurentPoly:
    x = as_scalar(x)
    return x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)


class FramedBraid:
    """framing . word, with the framing already slid to the left."""

    __slots__ = ("framing", "word")

    def __init__(self, framing: Sequence, word: BraidWord | Iterable = ()):
        framing = tuple(_laurent(v) for v in framing)
        if not isinstance(word, BraidWord):
            word = BraidWord(len(framing), word)
        if len(framing) != word.strands:
            raise StrandMismatchError(
                f"framing of length {len(framing)} on a {word.strands}-strand braid"
            )
        self.framing = framing
        self.word = word

    @classmethod
    def identity(cls, strands: int) -> "FramedBraid":
        return cls([1] * strands, BraidWord(strands))

    @classmethod
    def generator(cls, strands: int, k: int, sign: int = 1) -> "FramedBraid":
        return cls([1] * strands, BraidWord.generator(strands, k, sign))

    @classmethod
    def pure_framing(cls, framing: Sequence) -> "FramedBraid":
        return cls(framing, BraidWord(len(framing)))

    @classmethod
    def word_then_framing(cls, word: BraidWord, framing: Sequence) -> "FramedBraid":
        """``word . framing`` brought to normal form."""
        return fb_mul(cls.identity(word.strands).with_word(word), cls.pure_framing(framing))

    def with_word(self, word: BraidWord) -> "FramedBraid":
        return FramedBraid(self.framing, word)

    @property
    def strands(self) -> int:
        return self.word.strands

    def perm(self) -> Perm:
        return self.word.perm()

    def __mul__(self, other):
        if isinstance(other, FramedBraid):
            return fb_mul(self, other)
        if isinstance(other, BraidAlgebraElement):
            return BraidAlgebraElement.lift(self) * other
        if isinstance(other, (int, Cyclotomic, LaurentPoly)):
            return BraidAlgebraElement({self: other})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Cyclotomic, LaurentPoly)):
            return BraidAlgebraElement({self: other})
        return NotImplemented

    def __add__(self, other):
        return BraidAlgebraElement.lift(self) + other

    def __sub__(self, other):
        return BraidAlgebraElement.lift(self) - other

    def __neg__(self):
        return BraidAlgebraElement({self: -1})

    def inverse(self) -> "FramedBraid":
        """(v w)^-1 = w^-1 v^-1, renormalised."""
        inv_frame = [v.inv() for v in self.framing]
        return FramedBraid.word_then_framing(self.word.inverse(), inv_frame)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = FramedBraid.identity(self.strands)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return not self.word.letters and all(v == 1 for v in self.framing)

    def __eq__(self, other):
        return (
            isinstance(other, FramedBraid)
            and self.word == other.word
            and self.framing == other.framing
        )

    def __hash__(self):
        return hash((self.framing, self.word))

    def __str__(self):
        vec = "[" + ",".join(str(v) for v in self.framing) + "]"
        if not self.word.letters:
            return vec
        return f"{vec} {self.word}"

    def __repr__(self):
        return f"FramedBraid({self})"


def fb_mul(x: FramedBraid, y: FramedBraid) -> FramedBraid:
    """(v w)(u z) = (v . u slid through w)(w z), word freely reduced."""
    if x.strands != y.strands:
        raise StrandMismatchError(f"cannot multiply braids on {x.strands} and {y.strands} strands")
    slid = vector_pull(y.framing, x.word.perm())
    framing = [a * b for a, b in zip(x.framing, slid)]
    return FramedBraid(framing, x.word * y.word)


class BraidAlgebraElement:
    """A finite formal sum  sum_k c_k (v_k w_k)  of framed braids."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FramedBraid, object] | None = None):
        clean: dict[FramedBraid, object] = {}
        strands = set()
        for fb, c in (terms or {}).items():
            c = as_scalar(c)
            strands.add(fb.strands)
            clean[fb] = clean[fb] + c if fb in clean else c
        if len(strands) > 1:
            raise StrandMismatchError("mixed strand counts in one algebra element")
        self.terms = {fb: c for fb, c in clean.items() if c}

    @classmethod
    def lift(cls, x) -> "BraidAlgebraElement":
        if isinstance(x, BraidAlgebraElement):
            return x
        if isinstance(x, FramedBraid):
            return cls({x: 1})
        raise TypeError(f"cannot lift {type(x).__name__} into the braid algebra")

    def __add__(self, other):
        if isinstance(other, (FramedBraid, BraidAlgebraElement)):
            other = BraidAlgebraElement.lift(other)
            out = dict(self.terms)
            for fb, c in other.terms.items():
                out[fb] = out[fb] + c if fb in out else c
            return BraidAlgebraElement(out)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return BraidAlgebraElement({fb: -c for fb, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (FramedBraid, BraidAlgebraElement)):
            return self + (-BraidAlgebraElement.lift(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, FramedBraid):
            return BraidAlgebraElement.lift(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Cyclotomic, LaurentPoly)):
            return BraidAlgebraElement({fb: c * other for fb, c in self.terms.items()})
        if isinstance(other, (FramedBraid, BraidAlgebraElement)):
            other = BraidAlgebraElement.lift(other)
            out: dict[FramedBraid, object] = {}
            for x, a in self.terms.items():
                for y, b in other.terms.items():
                    z = fb_mul(x, y)
                    out[z] = out[z] + a * b if z in out else a * b
            return BraidAlgebraElement(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Cyclotomic, LaurentPoly)):
            return self * other
        if isinstance(other, FramedBraid):
            return BraidAlgebraElement.lift(other) * self
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if not self.terms:
            return self
        n = next(iter(self.terms)).strands
        out = BraidAlgebraElement.lift(FramedBraid.identity(n))
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, FramedBraid):
            other = BraidAlgebraElement.lift(other)
        if not isinstance(other, BraidAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def single(self) -> FramedBraid | None:
        """The framed braid itself when this is 1 * (one framed braid)."""
        if len(self.terms) == 1:
            (fb, c), = self.terms.items()
            if c == 1:
                return fb
        return None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for fb, c in sorted(self.terms.items(), key=lambda kv: str(kv[0])):
            if c == 1:
                parts.append(str(fb))
            elif c == -1:
                parts.append(f"-{fb}")
            else:
                parts.append(f"({c}) {fb}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"BraidAlgebraElement({self})"


# -- particle catalogue ------------------------------------------------------


_MONO = re.compile(r"^\s*(?:([+-]?\d+(?:/\d+)?)\s*\*?\s*)?t(?:\s*\^\s*([+-]?\d+))?\s*$")
_CONST = re.compile(r"^\s*[+-]?\d+(?:/\d+)?\s*$")


def parse_framing_entry(text) -> LaurentPoly:
    """Framing strings such as ``t``, ``t^-1``, ``2 t^3`` or ``1``."""
    if isinstance(text, (int, LaurentPoly, Cyclotomic)):
        return _laurent(text)
    s = str(text)
    if _CONST.match(s):
        return LaurentPoly.constant(as_scalar(s.strip()))
    m = _MONO.match(s)
    if not m:
        raise MalformedScalarError(f"bad framing entry {text!r}; expected forms like t^2 or 1")
    coeff = as_scalar(m.group(1)) if m.group(1) else 1
    exp = int(m.group(2)) if m.group(2) is not None else 1
    return LaurentPoly.monomial(exp, coeff)


def framing_to_text(v: LaurentPoly) -> str:
    if v.is_monomial():
        (e, c), = v.terms.items()
        if c == 1:
            return "1" if e == 0 else f"t^{e}"
    return str(v)


class ParticleCatalogue:
    """Append-only registry of named framed braids; registration is locked."""

    def __init__(self, entries: Mapping[str, FramedBraid] | None = None):
        self._lock = threading.Lock()
        self._entries: dict[str, FramedBraid] = dict(entries or {})

    def register(self, name: str, fb: FramedBraid, replace: bool = False) -> FramedBraid:
        with self._lock:
            if name in self._entries and not replace and self._entries[name] != fb:
                raise IterantError(f"particle {name!r} is already defined differently")
            self._entries[name] = fb
        return fb

    def define(self, record: Mapping) -> FramedBraid:
        """Register a particle from a JSON-style record."""
        try:
            name = str(record["name"])
            strands = int(record["strands"])
            framing = [parse_framing_entry(x) for x in record["framing"]]
            word = BraidWord(strands, [tuple(l) for l in record.get("word", [])])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, IterantError):
                raise
            raise IterantError(f"malformed particle record: {exc}") from exc
        return self.register(name, FramedBraid(framing, word))

    def get(self, name: str) -> FramedBraid:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownParticleError(
                f"unknown particle {name!r}; catalogue has: {', '.join(self.names())}"
            ) from None

    def __contains__(self, name):
        return name in self._entries

    def names(self) -> list[str]:
        return list(self._entries)

    def items(self):
        return list(self._entries.items())

    def copy(self) -> "ParticleCatalogue":
        return ParticleCatalogue(self._entries)


def _builtin_particles() -> dict[str, FramedBraid]:
    t, tinv = T, T.inv()
    e_plus = FramedBraid([t, t, t], [(1, 1), (2, -1)])
    e_minus = FramedBraid.word_then_framing(BraidWord(3, [(2, 1), (1, -1)]), [tinv] * 3)
    gamma = FramedBraid.identity(3)
    return {"e+": e_plus, "e-": e_minus, "gamma": gamma}


CATALOGUE = ParticleCatalogue(_builtin_particles())


def particle(name: str, catalogue: ParticleCatalogue | None = None) -> FramedBraid:
    return (catalogue or CATALOGUE).get(name)


@dataclass(frozen=True)
class FactorizationReport:
    holds: bool
    product: FramedBraid
    computed: FramedBraid

    def __bool__(self):
        return self.holds

    def report(self) -> str:
        verdict = "holds" if self.holds else "fails"
        return (
            f"factorization {verdict}\n"
            f"  product normal form: {self.product}\n"
            f"  factors normal form: {self.computed}"
        )


def verify_factorization(product: FramedBraid, factors: Sequence[FramedBraid]) -> FactorizationReport:
    """Does the product of ``factors`` have the same normal form as ``product``?"""
    acc = FramedBraid.identity(product.strands)
    for f in factors:
        acc = fb_mul(acc, f)
    return FactorizationReport(acc == product, product, acc)


# -- maps into iterant algebras ----------------------------------------------


@lru_cache(maxsize=None)
def symmetric_natural(n: int) -> Group:
    return symmetric(n, natural=True)


@lru_cache(maxsize=None)
def _perm_index(n: int) -> dict[Perm, int]:
    G = symmetric_natural(n)
    return {G.action[g]: g for g in range(len(G.elements))}


def _terms(x) -> list[tuple[object, FramedBraid]]:
    if isinstance(x, FramedBraid):
        return [(as_scalar(1), x)]
    if isinstance(x, BraidAlgebraElement):
        return [(c, fb) for fb, c in x.terms.items()]
    raise TypeError(f"expected a framed braid or braid algebra element, got {type(x).__name__}")


def _strands_of(x) -> int:
    if isinstance(x, FramedBraid):
        return x.strands
    if x.terms:
        return next(iter(x.terms)).strands
    raise IterantError("cannot infer the strand count of the zero element")


def _special(v: LaurentPoly, t_value):
    return v if t_value is None else v.specialize(t_value)


def pi_hat(x, t_value=None) -> Iterant:
    """Replace every braid word by its permutation; framings stay diagonal.

    With ``t_value`` the framings are specialised, otherwise the iterant keeps
    Laurent-polynomial entries.
    """
    n = _strands_of(x)
    G = symmetric_natural(n)
    index = _perm_index(n)
    out = Iterant.zero(G)
    for c, fb in _terms(x):
        vec = [c * _special(v, t_value) for v in fb.framing]
        out = out + Iterant(G, {index[fb.perm()]: vec})
    return out


def _constant_reading(k: int, sign: int, t, n: int) -> list:
    return [t ** sign] * n


def _fixed_prefix_reading(k: int, sign: int, t, n: int) -> list:
    # "[t,t]" taken literally as the first two slots, whatever the crossing
    return [t ** sign, t ** sign] + [1] * (n - 2)


def _crossing_local_reading(k: int, sign: int, t, n: int) -> list:
    # "[t,t]" placed on the two strands that actually cross
    return [t ** sign if j in (k - 1, k) else 1 for j in range(n)]


READINGS: dict[str, Callable] = {
    "constant": _constant_reading,
    "fixed-prefix": _fixed_prefix_reading,
    "crossing-local": _crossing_local_reading,
}


def _letter_image(k: int, sign: int, t, n: int, reading: str, target: Callable[[int], Iterant]) -> Iterant:
    vec = READINGS[reading](k, sign, t, n)
    return Iterant.vector(target(k).group, vec) * target(k)


def _rho_general(x, t_value, reading: str, target: Callable[[int], Iterant], group: Group) -> Iterant:
    if reading not in READINGS:
        raise IterantError(f"unknown reading {reading!r}; choose from {', '.join(READINGS)}")
    t = T if t_value is None else as_scalar(t_value)
    if not isinstance(t, LaurentPoly) and not t:
        from .errors import SpecializationError

        raise SpecializationError("t must be invertible")
    n = _strands_of(x)
    out = Iterant.zero(group)
    for c, fb in _terms(x):
        term = Iterant.vector(group, [c * _special(v, t_value) for v in fb.framing])
        for k, s in fb.word.letters:
            term = term * _letter_image(k, s, t, n, reading, target)
        out = out + term
    return out


def rho(x, t_value=None, reading: str = "constant") -> Iterant:
    """sigma_k^(+-1) -> [t^(+-1), ...] T_k in the iterant algebra of S_n.

    The default reading multiplies T_k by the constant framing t^(+-1), which
    respects the braid relations.  ``reading`` selects one of the alternative
    placements of the two-slot framing for comparison.
    """
    n = _strands_of(x)
    G = symmetric_natural(n)
    index = _perm_index(n)
    gens = {
        k: Iterant.element(G, index[Perm.from_cycles(n, [(k, k + 1)])]) for k in range(1, n)
    }
    return _rho_general(x, t_value, reading, gens.__getitem__, G)


def embed_su3(x, t_value=None, reading: str = "constant") -> Iterant:
    """rho followed by T1 -> P, T2 -> Q, landing in iterants over C3."""
    from .su3 import c3, transposition_embedding

    if _strands_of(x) != 3:
        raise StrandMismatchError("the su(3) embedding needs three-strand braids")
    P, Q, _ = transposition_embedding()
    return _rho_general(x, t_value, reading, {1: P, 2: Q}.__getitem__, c3())
