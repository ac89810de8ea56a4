"""
Exact scalars: cyclotomic fields Q(zeta_N) and Laurent polynomials over them.

A :class:`Cyclotomic` stores an element of Q(zeta_N) in the power basis
1, zeta, ..., zeta^(d-1) with d = deg(Phi_N).  Coefficients are kept as a
tuple of integer numerators over one positive common denominator, always in
lowest terms, so two values of the same order are equal exactly when their
stored data is equal.  Values of different orders are compared and combined
inside Q(zeta_lcm).

:class:`LaurentPoly` is a sparse map ``exponent -> Cyclotomic`` in a formal
variable ``t``; it is used for the framings of braid strands.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import MalformedScalarError, MissingRootError, SpecializationError

__all__ = [
    "Cyclotomic",
    "LaurentPoly",
    "as_scalar",
    "cyc_make",
    "cyclotomic_poly",
    "laurent_specialize",
    "zeta",
    "sqrt3",
    "require_root",
]


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials with monic ``den``."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j, dc in enumerate(den):
                num[k - dn + j] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def _phi(n: int) -> tuple[int, ...]:
    if n < 1:
        raise MalformedScalarError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, _phi(d))
    return tuple(poly)


def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d.

    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    return _phi(n)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class _Field:
    """Precomputed reduction data for Q(zeta_n)."""

    __slots__ = ("n", "deg", "phi", "powers", "ntrace")

    def __init__(self, n: int):
        self.n = n
        self.phi = _phi(n)
        self.deg = len(self.phi) - 1
        d = self.deg
        # powers[m] = zeta^m reduced, for 0 <= m < n
        powers = []
        cur = [1] + [0] * (d - 1)
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.phi[j]
        self.powers = powers
        # trace of zeta^j divided by phi(n): mu(n/g)/phi(n/g), g = gcd(j, n)
        self.ntrace = tuple(
            Fraction(_mobius(n // math.gcd(j, n)), _totient(n // math.gcd(j, n)))
            for j in range(d)
        )

    def reduce(self, vec: Sequence[int]) -> list[int]:
        d, n = self.deg, self.n
        out = list(vec[:d]) + [0] * max(0, d - len(vec))
        for k in range(d, len(vec)):
            c = vec[k]
            if c:
                for j, p in enumerate(self.powers[k % n]):
                    if p:
                        out[j] += c * p
        return out


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _solve_fraction(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a (possibly overdetermined) rational system; None if inconsistent."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, m) if aug[k][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(m):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(aug[k][n] != 0 for k in range(r, m)):
        return None
    sol = [Fraction(0)] * n
    for k, c in enumerate(pivots):
        sol[c] = aug[k][n]
    return sol


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An exact element of the cyclotomic field Q(zeta_order).

    >>> w = zeta(3)
    >>> 1 + w + w * w
    0
    >>> zeta(4) ** 2
    -1
    """

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, coeffs: Iterable):
        coeffs = [Fraction(c) for c in coeffs]
        if not coeffs:
            raise MalformedScalarError(
                f"Q(zeta_{order}) needs at least one coefficient, got none"
            )
        field = _field(order)
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        nums = [int(c * den) for c in coeffs]
        self._set(order, field.reduce(nums), den)

    def _set(self, order, num, den):
        g = math.gcd(den, *num)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        if not any(num):
            den = 1
        self.order = order
        self.num = tuple(num)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, order: int, num: Sequence[int], den: int) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj._set(order, num, den)
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def rational(cls, value, order: int = 1) -> "Cyclotomic":
        value = Fraction(value)
        deg = _field(order).deg
        return cls._raw(order, [value.numerator] + [0] * (deg - 1), value.denominator)

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "Cyclotomic":
        return cls.rational(1, order)

    @classmethod
    def root(cls, order: int, k: int = 1) -> "Cyclotomic":
        field = _field(order)
        return cls._raw(order, field.powers[k % order], 1)

    # -- field plumbing ------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def embed(self, order: int) -> "Cyclotomic":
        """The same value viewed inside Q(zeta_order); ``self.order`` must divide it."""
        if order == self.order:
            return self
        if order % self.order:
            raise MissingRootError(
                f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})"
            )
        field = _field(order)
        step = order // self.order
        out = [0] * field.deg
        for j, c in enumerate(self.num):
            if c:
                for k, p in enumerate(field.powers[(j * step) % order]):
                    if p:
                        out[k] += c * p
        return Cyclotomic._raw(order, out, self.den)

    def restrict(self, order: int) -> "Cyclotomic":
        """Express the value in the subfield Q(zeta_order); raises if it is not there."""
        if order == self.order:
            return self
        if self.order % order:
            raise MissingRootError(f"Q(zeta_{order}) is not a subfield of Q(zeta_{self.order})")
        sub = _field(order)
        cols = [Cyclotomic.root(order, j).embed(self.order).num for j in range(sub.deg)]
        rows = [[Fraction(col[r]) for col in cols] for r in range(_field(self.order).deg)]
        sol = _solve_fraction(rows, [Fraction(c, self.den) for c in self.num])
        if sol is None:
            raise MissingRootError(f"{self!r} does not lie in Q(zeta_{order})")
        return Cyclotomic(order, sol)

    def minimal(self) -> "Cyclotomic":
        """Re-express in the smallest Q(zeta_d), d | order, that contains the value."""
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0])
        for d in range(2, self.order):
            if self.order % d == 0 and d % 4 != 2:
                try:
                    return self.restrict(d)
                except MissingRootError:
                    pass
        return self

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic.rational(other)
        return None

    def _align(self, other: "Cyclotomic"):
        if self.order == other.order:
            return self, other
        n = self.order * other.order // math.gcd(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        if a.den == b.den:
            return Cyclotomic._raw(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        return Cyclotomic._raw(
            a.order, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, [-x for x in self.num], self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        field = _field(a.order)
        d = field.deg
        if d == 1:
            return Cyclotomic._raw(a.order, [a.num[0] * b.num[0]], a.den * b.den)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic._raw(a.order, field.reduce(conv), a.den * b.den)

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.to_fraction(), self.order)
        field = _field(self.order)
        d = field.deg
        cols = [(self * Cyclotomic.root(self.order, j)).coeffs for j in range(d)]
        rows = [[cols[j][r] for j in range(d)] for r in range(d)]
        sol = _solve_fraction(rows, [Fraction(1)] + [Fraction(0)] * (d - 1))
        return Cyclotomic(self.order, sol)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        result = Cyclotomic.one(self.order)
        for _ in range(abs(k)):
            result = result * base
        return result

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.order}")
        field = _field(self.order)
        out = [0] * field.deg
        for j, c in enumerate(self.num):
            if c:
                for r, p in enumerate(field.powers[(j * k) % self.order]):
                    if p:
                        out[r] += c * p
        return Cyclotomic._raw(self.order, out, self.den)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^-1."""
        return self.galois(-1)

    # -- comparisons ---------------------------------------------------------

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        # normalised trace is invariant under field embeddings
        if self._hash is None:
            field = _field(self.order)
            tr = sum((c * t for c, t in zip(self.num, field.ntrace)), Fraction(0)) / self.den
            self._hash = hash(tr)
        return self._hash

    # -- rendering -----------------------------------------------------------

    def __complex__(self):
        return sum(
            (c / self.den) * cmath.exp(2j * cmath.pi * k / self.order)
            for k, c in enumerate(self.num)
        ) + 0j

    def approx(self, places: int = 6) -> str:
        z = complex(self)
        re = round(z.real, places) + 0.0
        im = round(z.imag, places) + 0.0
        if im == 0:
            return f"{re:.{places}f}"
        sign = "+" if im > 0 else "-"
        return f"{re:.{places}f}{sign}{abs(im):.{places}f}i"

    def _sqrt3_parts(self) -> list[tuple[Fraction, str | None]]:
        """Coordinates on 1, sqrt3, i, i sqrt3 for an element of Q(zeta_12)."""
        basis = _sqrt3_basis()
        rows = [[b.coeffs[r] for b in basis] for r in range(4)]
        sol = _solve_fraction(rows, list(self.embed(12).coeffs))
        atoms = [None, "sqrt3", "i", "i sqrt3"]
        return [(c, a) for c, a in zip(sol, atoms)]

    def __str__(self):
        m = self.minimal()
        if m.order == 1:
            return str(Fraction(m.num[0], m.den))
        if m.order == 12:
            return _join_terms(self._sqrt3_parts())
        names = {4: "i", 3: "w"}
        terms = []
        for k, c in enumerate(m.num):
            if k == 0:
                atom = None
            elif m.order in names:
                atom = names[m.order] + (f"^{k}" if k > 1 else "")
            else:
                atom = f"zeta({m.order},{k})"
            terms.append((Fraction(c, m.den), atom))
        return _join_terms(terms)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"


def _join_terms(terms) -> str:
    parts = []
    for coef, atom in terms:
        if not coef:
            continue
        mag = abs(coef)
        if atom is None:
            body = str(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{mag} {atom}"
        if not parts:
            parts.append(("-" if coef < 0 else "") + body)
        else:
            parts.append((" - " if coef < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _sqrt3_basis() -> tuple:
    r3 = sqrt3()
    i = zeta(4).embed(12)
    return (Cyclotomic.one(12), r3, i, i * r3)


def cyc_make(order: int, coeffs: Sequence) -> Cyclotomic:
    """Build the canonical element sum(coeffs[k] * zeta_order^k)."""
    return Cyclotomic(order, coeffs)


def zeta(order: int, k: int = 1) -> Cyclotomic:
    """The root of unity exp(2 pi i k / order)."""
    return Cyclotomic.root(order, k)


def sqrt3() -> Cyclotomic:
    """Exact square root of 3, as zeta_12 - zeta_12^5."""
    return zeta(12, 1) - zeta(12, 5)


def require_root(order: int, needed: int, what: str = "construction") -> None:
    if order % needed:
        raise MissingRootError(
            f"{what} needs a primitive {needed}-th root of unity but the scalar order is {order}"
        )


def as_scalar(value):
    """Coerce ints, Fractions and 'p/q' strings to Cyclotomic; pass ring elements through."""
    if isinstance(value, (Cyclotomic, LaurentPoly)):
        return value
    if isinstance(value, (int, Rational)):
        return Cyclotomic.rational(value)
    if isinstance(value, str):
        try:
            return Cyclotomic.rational(Fraction(value))
        except ValueError:
            raise MalformedScalarError(f"not a rational: {value!r}") from None
    raise MalformedScalarError(f"cannot use {value!r} as a scalar")


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial in ``t`` with cyclotomic coefficients.

    >>> t = LaurentPoly.monomial(1)
    >>> (t * t ** -1) == 1
    True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = as_scalar(c)
            if isinstance(c, LaurentPoly):
                raise MalformedScalarError("nested Laurent coefficients are not supported")
            if c:
                clean[int(e)] = c
        self._terms = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, exponent: int = 1, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff) -> "LaurentPoly":
        return cls({0: coeff})

    @property
    def terms(self) -> dict[int, Cyclotomic]:
        return dict(self._terms)

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Cyclotomic:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms[0][1] if self._terms else Cyclotomic.zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (Cyclotomic, int, Rational)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, Cyclotomic] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def inv(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit in the Laurent ring")
        (e, c), = self._terms
        return LaurentPoly({-e: c.inv()})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        result = LaurentPoly.constant(1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conj(self) -> "LaurentPoly":
        """Conjugate the coefficients and send t to t^-1 (t on the unit circle)."""
        return LaurentPoly({-e: c.conj() for e, c in self._terms})

    def specialize(self, value) -> Cyclotomic:
        value = as_scalar(value)
        if isinstance(value, LaurentPoly):
            raise SpecializationError("specialization value must be a scalar")
        negative = any(e < 0 for e, _ in self._terms)
        if negative and not value:
            raise SpecializationError("cannot specialize negative powers of t at 0")
        total = Cyclotomic.zero(value.order)
        for e, c in self._terms:
            total = total + c * value ** e
        return total

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            atom = "t" if e == 1 else f"t^{e}"
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(atom)
            elif c == -1:
                parts.append("-" + atom)
            elif c.is_rational():
                parts.append(f"{c} {atom}")
            else:
                parts.append(f"({c}) {atom}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def laurent_specialize(p: LaurentPoly, value) -> Cyclotomic:
    """Evaluate ``p`` at ``t = value``; a ring homomorphism for invertible values."""
    return p.specialize(value)
