"""
The iterant algebra Vect_n(G, F).

An :class:`Iterant` is a finite formal sum of terms ``a g`` where ``g`` is a
group element and ``a`` a coefficient vector of length n (the degree of the
group's permutation action).  Products follow

    (a g)(b h) = (a * b^g)(g h),   b^g = (b_{1g}, ..., b_{ng}),

i.e. a vector slides leftwards past ``g`` by reading its entries through the
permutation of ``g``.  ``to_matrix`` realises ``a g`` as ``diag(a) M_g`` and is
an algebra homomorphism; for regular actions it is a bijection onto all
n x n matrices and ``from_matrix`` inverts it.
"""

from __future__ import annotations

from numbers import Rational
from typing import Mapping, Sequence

from .errors import DecompositionError, GroupError, GroupMismatchError
from .groups import Group, Perm, vector_pull
from .matrix import Matrix
from .scalars import Cyclotomic, LaurentPoly, as_scalar

__all__ = [
    "Iterant",
    "it_mul",
    "it_add",
    "it_scale",
    "it_commutator",
    "it_anticommutator",
    "it_trace",
    "basic_idempotent",
    "to_matrix",
    "from_matrix",
    "conj2",
    "det2",
]

_SCALAR_TYPES = (int, Rational, Cyclotomic, LaurentPoly)


class Iterant:
    """A sum of vector-weighted group elements over a fixed :class:`Group`.

    ``terms`` maps element indices to coefficient tuples; all-zero vectors are
    never stored, so the zero iterant has no terms.
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms: Mapping | None = None):
        self.group = group
        n = group.degree
        clean: dict[int, tuple] = {}
        for g, vec in (terms or {}).items():
            idx = group.index(g)
            vec = tuple(as_scalar(v) for v in vec)
            if len(vec) != n:
                raise GroupError(
                    f"vector of length {len(vec)} for a degree-{n} action of {group.name}"
                )
            if idx in clean:
                vec = tuple(a + b for a, b in zip(clean[idx], vec))
            clean[idx] = vec
        self.terms = {g: v for g, v in clean.items() if any(v)}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group: Group) -> "Iterant":
        return cls(group)

    @classmethod
    def scalar(cls, group: Group, c) -> "Iterant":
        return cls(group, {group.identity: [c] * group.degree})

    @classmethod
    def unit(cls, group: Group) -> "Iterant":
        return cls.scalar(group, 1)

    @classmethod
    def vector(cls, group: Group, vec: Sequence, element=None) -> "Iterant":
        """``[v1, ..., vn] g``; ``g`` defaults to the identity."""
        g = group.identity if element is None else element
        return cls(group, {g: vec})

    @classmethod
    def element(cls, group: Group, g) -> "Iterant":
        """The group element with unit coefficients, ``[1, ..., 1] g``."""
        return cls(group, {g: [1] * group.degree})

    # -- algebra -------------------------------------------------------------

    def _check(self, other: "Iterant"):
        if other.group is not self.group and other.group != self.group:
            raise GroupMismatchError(
                f"cannot combine iterants over {self.group.name} and {other.group.name}"
            )

    def _lift(self, other):
        if isinstance(other, Iterant):
            self._check(other)
            return other
        if isinstance(other, _SCALAR_TYPES):
            return Iterant.scalar(self.group, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for g, v in other.terms.items():
            out[g] = tuple(a + b for a, b in zip(out[g], v)) if g in out else v
        return Iterant(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return Iterant(self.group, {g: tuple(-a for a in v) for g, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, k) -> "Iterant":
        k = as_scalar(k)
        return Iterant(self.group, {g: tuple(k * a for a in v) for g, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        if not isinstance(other, Iterant):
            return NotImplemented
        self._check(other)
        group = self.group
        table, action = group.cayley, group.action
        acc: dict[int, list] = {}
        for g, a in self.terms.items():
            perm = action[g]
            for h, b in other.terms.items():
                pulled = vector_pull(b, perm)
                prod = [x * y if x and y else None for x, y in zip(a, pulled)]
                if not any(p is not None for p in prod):
                    continue
                k = table[g][h]
                slot = acc.get(k)
                if slot is None:
                    acc[k] = [p if p is not None else as_scalar(0) for p in prod]
                else:
                    for i, p in enumerate(prod):
                        if p is not None:
                            slot[i] = slot[i] + p
        return Iterant(group, acc)

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(as_scalar(1) / as_scalar(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = Iterant.unit(self.group)
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "Iterant":
        """Inverse of a monomial ``a g`` with invertible entries, or via the matrix image."""
        if len(self.terms) == 1:
            (g, a), = self.terms.items()
            if all(a):
                ginv = self.group.inverse(g)
                inv_a = tuple(as_scalar(1) / x for x in a)
                return Iterant(self.group, {ginv: vector_pull(inv_a, self.group.action[ginv])})
        return from_matrix(self.to_matrix().inverse(), self.group)

    def commutator(self, other: "Iterant") -> "Iterant":
        return self * other - other * self

    def anticommutator(self, other: "Iterant") -> "Iterant":
        return self * other + other * self

    # -- queries -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            other = Iterant.scalar(self.group, other)
        if not isinstance(other, Iterant):
            return NotImplemented
        if other.group is not self.group and other.group != self.group:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(
            all(x == y for x, y in zip(v, other.terms[g])) for g, v in self.terms.items()
        )

    def __hash__(self):
        return hash(frozenset((g, v) for g, v in self.terms.items()))

    def is_scalar(self) -> bool:
        """True when the iterant is a multiple of the unit."""
        if not self.terms:
            return True
        if set(self.terms) != {self.group.identity}:
            return False
        v = self.terms[self.group.identity]
        return all(x == v[0] for x in v)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError(f"{self} is not a multiple of the unit")
        if not self.terms:
            return as_scalar(0)
        return self.terms[self.group.identity][0]

    def coefficient(self, g) -> tuple:
        idx = self.group.index(g)
        return self.terms.get(idx, tuple(as_scalar(0) for _ in range(self.group.degree)))

    def to_matrix(self) -> Matrix:
        return to_matrix(self)

    def trace(self):
        return it_trace(self)

    def map_coefficients(self, fn) -> "Iterant":
        return Iterant(self.group, {g: tuple(fn(a) for a in v) for g, v in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        ident = self.group.identity
        for g in sorted(self.terms):
            v = self.terms[g]
            constant = all(x == v[0] for x in v)
            if g == ident and constant:
                s = str(v[0])
                if " + " in s or " - " in s[1:]:
                    s = f"({s})"
                parts.append(s)
                continue
            vec = "[" + ",".join(str(x) for x in v) + "]"
            parts.append(vec if g == ident else vec + self.group.label(g))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Iterant({self.group.name}: {self})"


# ---------------------------------------------------------------------------


def it_mul(x: Iterant, y: Iterant) -> Iterant:
    return x * y


def it_add(x: Iterant, y: Iterant) -> Iterant:
    return x + y


def it_scale(k, x: Iterant) -> Iterant:
    return x.scale(k)


def it_commutator(x: Iterant, y: Iterant) -> Iterant:
    return x * y - y * x


def it_anticommutator(x: Iterant, y: Iterant) -> Iterant:
    return x * y + y * x


def it_trace(x: Iterant):
    """Trace of the matrix image."""
    total = as_scalar(0)
    for g, v in x.terms.items():
        perm = x.group.action[g]
        for i, j in enumerate(perm.images):
            if i == j:
                total = total + v[i]
    return total


def basic_idempotent(group: Group, i: int) -> Iterant:
    """e_i: a 1 in slot i (1-based) times the identity element."""
    n = group.degree
    if not 1 <= i <= n:
        raise GroupError(f"idempotent index {i} outside 1..{n}")
    return Iterant.vector(group, [1 if k == i - 1 else 0 for k in range(n)])


def to_matrix(x: Iterant) -> Matrix:
    """Sum over terms of diag(v_g) times the permutation matrix of g."""
    n = x.group.degree
    grid = [[as_scalar(0)] * n for _ in range(n)]
    for g, v in x.terms.items():
        for i, j in enumerate(x.group.action[g].images):
            if v[i]:
                grid[i][j] = grid[i][j] + v[i]
    return Matrix(grid, cols=n)


def _coverage(group: Group):
    n = group.degree
    count = [[0] * n for _ in range(n)]
    for perm in group.action:
        for i, j in enumerate(perm.images):
            count[i][j] += 1
    uncovered = [(i + 1, j + 1) for i in range(n) for j in range(n) if count[i][j] == 0]
    overlapping = [(i + 1, j + 1) for i in range(n) for j in range(n) if count[i][j] > 1]
    return uncovered, overlapping


def from_matrix(m: Matrix, group: Group) -> Iterant:
    """The unique iterant whose matrix image is ``m``.

    Needs the action's permutation matrices to tile the square exactly once,
    as the regular representation does.
    """
    n = group.degree
    if m.shape != (n, n):
        raise DecompositionError(f"expected a {n}x{n} matrix for {group.name}, got {m.rows}x{m.cols}")
    uncovered, overlapping = _coverage(group)
    if uncovered or overlapping:
        msg = f"the action of {group.name} does not tile the {n}x{n} grid"
        if uncovered:
            msg += "; uncovered cells " + ", ".join(f"({i},{j})" for i, j in uncovered)
        if overlapping:
            msg += "; multiply covered cells " + ", ".join(f"({i},{j})" for i, j in overlapping)
        raise DecompositionError(msg, uncovered, overlapping)
    terms = {}
    for g, perm in enumerate(group.action):
        terms[g] = [m.entries[i][j] for i, j in enumerate(perm.images)]
    return Iterant(group, terms)


def _swap_element(group: Group) -> int:
    swap = Perm([1, 0])
    if group.order != 2 or group.degree != 2:
        raise GroupError("conjugate/determinant need the order-2 group acting by a swap")
    g = 1 - group.identity
    if group.action[g] != swap:
        raise GroupError("the non-identity element must act by the swap")
    return g


def conj2(z: Iterant) -> Iterant:
    """Conjugate of ``A + B eta``: the swapped ``A`` minus ``B eta`` (the classical adjoint)."""
    eta = _swap_element(z.group)
    e = z.group.identity
    a = z.coefficient(e)
    b = z.coefficient(eta)
    return Iterant(z.group, {e: (a[1], a[0]), eta: (-b[0], -b[1])})


def det2(z: Iterant):
    """D(Z) with Z conj(Z) = D(Z) 1; equals ab - cd for [a,b] + [c,d] eta."""
    prod = z * conj2(z)
    if not prod.is_scalar():
        raise ArithmeticError(f"Z conj(Z) is not scalar: {prod}")
    return prod.scalar_value()
