"""
Finite groups acting on {1, ..., n} by permutations.

Permutations act on the right, as in ``i(pq) = (ip)q``: the element of the
domain is written to the left of the permutation.  With that convention the
permutation matrix of ``p`` (row ``i`` has its 1 in column ``ip``) satisfies
``perm_matrix(p * q) == perm_matrix(p) * perm_matrix(q)``.

Indices are 1-based in everything user-facing (cycle notation, JSON image
arrays); internally a :class:`Perm` stores 0-based images.
"""

from __future__ import annotations

import itertools
import random
import re
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatchError, GroupError

__all__ = [
    "Perm",
    "Group",
    "perm_compose",
    "vector_act",
    "vector_pull",
    "regular_representation",
    "builtin_group",
    "cyclic",
    "symmetric",
    "klein4",
    "perm_matrix",
]


class Perm:
    """A permutation of {1..n}, stored as 0-based images.

    >>> p = Perm.from_cycles(4, [(1, 2), (3, 4)])
    >>> q = Perm.from_cycles(4, [(1, 3), (2, 4)])
    >>> str(p * q)
    '(1 4)(2 3)'
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Perm":
        return cls([x - 1 for x in images])

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if not 1 <= a <= n or a in seen:
                    raise GroupError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(a)
                images[a - 1] = cyc[(k + 1) % len(cyc)] - 1
        return cls(images)

    @classmethod
    def parse(cls, n: int, text: str) -> "Perm":
        """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"()"``."""
        text = text.strip()
        if text in ("", "()", "1", "e"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise GroupError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> list[int]:
        return [x + 1 for x in self.images]

    def __call__(self, i: int) -> int:
        """Image of the 1-based point ``i``."""
        return self.images[i - 1] + 1

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k + 1)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Perm({str(self)!r}, degree={self.degree})"


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: first ``p``, then ``q``."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"cannot compose degrees {p.degree} and {q.degree}")
    qi = q.images
    return Perm([qi[x] for x in p.images])


def perm_matrix(p: Perm):
    """0/1 matrix with row i carrying its 1 in column ``i p``."""
    from .matrix import Matrix

    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(p.images):
        rows[i][j] = 1
    return Matrix(rows)


def vector_act(a: Sequence, p: Perm) -> tuple:
    """Slide a diagonal vector rightwards through ``p``.

    Returns the vector ``b`` with ``diag(a) M_p = M_p diag(b)``, i.e.
    ``b[i p] = a[i]``.  This is a right action: acting by p then q equals
    acting by ``p * q``.
    """
    if len(a) != p.degree:
        raise DegreeMismatchError(f"vector of length {len(a)} against degree {p.degree}")
    out = [None] * len(a)
    for i, j in enumerate(p.images):
        out[j] = a[i]
    return tuple(out)


def vector_pull(b: Sequence, p: Perm) -> tuple:
    """Slide a diagonal vector leftwards through ``p``: ``(b_{1p}, ..., b_{np})``.

    This is the vector ``c`` with ``M_p diag(b) = diag(c) M_p``; it is what
    iterant multiplication uses in ``(a g)(b h) = (a b^g)(g h)``.
    """
    if len(b) != p.degree:
        raise DegreeMismatchError(f"vector of length {len(b)} against degree {p.degree}")
    return tuple(b[j] for j in p.images)


class Group:
    """A finite group given by its Cayley table, plus a permutation action.

    ``cayley[i][j]`` is the index of ``elements[i] * elements[j]``; ``action``
    maps each element index to the :class:`Perm` through which it acts on
    coordinates.  If no action is supplied the right regular action is used.
    """

    def __init__(
        self,
        elements: Sequence[str],
        cayley: Sequence[Sequence[int]],
        action: Mapping[int, Perm] | Sequence[Perm] | None = None,
        name: str | None = None,
        check: bool = True,
    ):
        self.elements = tuple(str(e) for e in elements)
        self.cayley = tuple(tuple(int(x) for x in row) for row in cayley)
        self.name = name or f"group{len(self.elements)}"
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise GroupError("element labels must be distinct")
        if len(self.cayley) != n or any(len(r) != n for r in self.cayley):
            raise GroupError(f"Cayley table must be {n}x{n}")
        if any(not 0 <= x < n for r in self.cayley for x in r):
            raise GroupError("Cayley table entries must index the element list")
        self._index = {e: k for k, e in enumerate(self.elements)}
        if check:
            self._validate()
        self.identity = self._find_identity()
        self._inverse = tuple(
            next(j for j in range(n) if self.cayley[i][j] == self.identity) for i in range(n)
        )
        if action is None:
            action = regular_representation(self)
        elif isinstance(action, Mapping):
            action = [action[k] for k in range(n)]
        self.action = tuple(action)
        if len(self.action) != n:
            raise GroupError("action must assign a permutation to every element")
        degrees = {p.degree for p in self.action}
        if len(degrees) != 1:
            raise GroupError("all action permutations must share one degree")
        self.degree = degrees.pop()
        if check:
            for i in range(n):
                for j in range(n):
                    if self.action[i] * self.action[j] != self.action[self.cayley[i][j]]:
                        raise GroupError(
                            f"action is not a homomorphism at "
                            f"({self.elements[i]}, {self.elements[j]})"
                        )

    def _validate(self):
        n = len(self.elements)
        table = self.cayley
        ident = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
        if not ident:
            raise GroupError("Cayley table has no identity")
        e = ident[0]
        for i in range(n):
            if sorted(table[i]) != list(range(n)):
                raise GroupError(f"row {self.elements[i]} is not a permutation (no inverses)")
            if e not in table[i]:
                raise GroupError(f"{self.elements[i]} has no inverse")
        if n <= 64:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(10 * n * n))
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupError(
                    "Cayley table is not associative at "
                    f"({self.elements[a]}, {self.elements[b]}, {self.elements[c]})"
                )

    def _find_identity(self) -> int:
        n = len(self.elements)
        for e in range(n):
            if all(self.cayley[e][x] == x for x in range(n)):
                return e
        raise GroupError("no identity element")

    # ------------------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        if isinstance(element, int):
            if not 0 <= element < len(self.elements):
                raise GroupError(f"element index {element} out of range")
            return element
        try:
            return self._index[str(element)]
        except KeyError:
            raise GroupError(f"{element!r} is not an element of {self.name}") from None

    def label(self, index: int) -> str:
        return self.elements[index]

    def mul(self, g, h) -> int:
        return self.cayley[self.index(g)][self.index(h)]

    def inverse(self, g) -> int:
        return self._inverse[self.index(g)]

    def perm(self, g) -> Perm:
        return self.action[self.index(g)]

    def power(self, g, k: int) -> int:
        g = self.index(g)
        if k < 0:
            g, k = self._inverse[g], -k
        out = self.identity
        for _ in range(k):
            out = self.cayley[out][g]
        return out

    def with_action(self, action, name: str | None = None, check: bool = True) -> "Group":
        return Group(self.elements, self.cayley, action, name=name or self.name, check=check)

    def is_regular_action(self) -> bool:
        return self.action == tuple(regular_representation(self))

    def __eq__(self, other):
        return (
            isinstance(other, Group)
            and self.elements == other.elements
            and self.cayley == other.cayley
            and self.action == other.action
        )

    def __hash__(self):
        return hash((self.elements, self.cayley))

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    def cayley_text(self) -> str:
        width = max(len(e) for e in self.elements)
        lines = []
        for row in self.cayley:
            lines.append(" ".join(self.elements[x].ljust(width) for x in row).rstrip())
        return "\n".join(lines)

    @classmethod
    def from_perms(
        cls, perms: Mapping[str, Perm], name: str | None = None, check: bool = True
    ) -> "Group":
        """Build a group from labelled permutations closed under composition."""
        labels = list(perms)
        lookup = {p: k for k, p in enumerate(perms.values())}
        values = list(perms.values())
        table = []
        for p in values:
            row = []
            for q in values:
                try:
                    row.append(lookup[p * q])
                except KeyError:
                    raise GroupError("permutations are not closed under composition") from None
            table.append(row)
        return cls(labels, table, action=values, name=name, check=check)


def regular_representation(group: Group) -> list[Perm]:
    """Right regular action: ``g_i rho(g) = g_i g``."""
    n = len(group.elements)
    return [Perm([group.cayley[i][g] for i in range(n)]) for g in range(n)]


def _power_label(gen: str, k: int) -> str:
    if k == 0:
        return "1"
    return gen if k == 1 else f"{gen}^{k}"


def cyclic(n: int, generator: str = "S", labels: Sequence[str] | None = None) -> Group:
    """C_n = {1, S, S^2, ...} with its regular action."""
    if n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n}")
    labels = list(labels) if labels else [_power_label(generator, k) for k in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(labels, table, name=f"C{n}", check=n <= 64)


def klein4() -> Group:
    """{1, A, B, C} with A^2 = B^2 = C^2 = 1 and AB = BA = C."""
    labels = ["1", "A", "B", "C"]
    table = [[i ^ j for j in range(4)] for i in range(4)]
    # bit pattern: A = 01, B = 10, C = 11
    return Group(labels, table, name="klein4")


def _perm_label(p: Perm) -> str:
    if p.is_identity():
        return "1"
    return "p" + "".join(str(x) for x in p.one_based())


def symmetric(n: int, natural: bool = False) -> Group:
    """S_n with elements labelled ``p<images>`` (e.g. ``p213``) and identity ``1``.

    Elements are ordered lexicographically by image list.  The default action
    is the regular one; ``natural=True`` gives the degree-n action instead.
    """
    if not 1 <= n <= 6:
        raise GroupError(f"symmetric groups are supported for 1 <= n <= 6, got {n}")
    perms = [Perm(p) for p in itertools.permutations(range(n))]
    # tables built from genuine permutations are valid by construction
    check = n <= 4
    group = Group.from_perms({_perm_label(p): p for p in perms}, name=f"S{n}", check=check)
    if natural:
        return group
    return group.with_action(None, name=f"S{n}", check=check)


def builtin_group(name: str) -> Group:
    """Resolve names like ``cyclic(6)``, ``C6``, ``symmetric(3)``, ``S3``, ``klein4``.

    A trailing ``:natural`` selects the natural action of a symmetric group.
    """
    raw = name.strip()
    key = raw.lower().replace(" ", "")
    natural = key.endswith(":natural")
    if natural:
        key = key[: -len(":natural")]
    if key in ("klein4", "v4", "k4") and not natural:
        return klein4()
    m = re.fullmatch(r"(?:cyclic\((\d+)\)|c(\d+))", key)
    if m and not natural:
        return cyclic(int(m.group(1) or m.group(2)))
    m = re.fullmatch(r"(?:symmetric\((\d+)\)|s(\d+))", key)
    if m:
        return symmetric(int(m.group(1) or m.group(2)), natural=natural)
    raise GroupError(
        f"unsupported group {raw!r}; try cyclic(n), symmetric(n)[:natural] or klein4"
    )
