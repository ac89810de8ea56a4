"""
su(3) in iterant form over the cyclic group C3 = {1, A, B}.

The eight Gell-Mann generators are written as sums of vector-weighted group
elements, the structure constants are derived from exact commutators, and the
Cartan-Weyl ladder elements and the transposition embedding of S3 are built on
top of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

from .errors import NotClosedError
from .groups import Group, cyclic
from .iterants import Iterant
from .scalars import Cyclotomic, as_scalar, require_root, sqrt3, zeta

__all__ = [
    "c3",
    "GellMannSet",
    "gell_mann",
    "StructureConstants",
    "derive_structure_constants",
    "REFERENCE_F",
    "compare_reference",
    "radical_report",
    "CartanWeyl",
    "cartan_weyl",
    "cartan_weyl_identities",
    "Transpositions",
    "transposition_embedding",
    "transposition_relations",
]


@lru_cache(maxsize=None)
def c3() -> Group:
    """C3 labelled 1, A, B with A the 3-cycle and B = A^2."""
    return cyclic(3, labels=["1", "A", "B"])


@dataclass(frozen=True)
class GellMannSet:
    lambdas: tuple[Iterant, ...]
    order: int

    @property
    def group(self) -> Group:
        return self.lambdas[0].group

    @property
    def F(self) -> tuple[Iterant, ...]:
        half = as_scalar("1/2")
        return tuple(l.scale(half) for l in self.lambdas)

    def __getitem__(self, a: int) -> Iterant:
        """lambda_a for a = 1..8."""
        return self.lambdas[a - 1]

    def gram(self) -> list[list[Cyclotomic]]:
        """tr(lambda_a lambda_b) for all 64 pairs."""
        return [[(x * y).trace() for y in self.lambdas] for x in self.lambdas]


def gell_mann(order: int = 12) -> GellMannSet:
    """The eight generators as C3 iterants; needs i and sqrt(3), so 12 | order."""
    require_root(order, 12, "Gell-Mann generators")
    G = c3()
    i = zeta(order, order // 4)
    r3 = sqrt3().embed(order)
    lam = (
        Iterant(G, {"A": [1, 0, 0], "B": [0, 1, 0]}),
        Iterant(G, {"A": [-i, 0, 0], "B": [0, i, 0]}),
        Iterant(G, {"1": [1, -1, 0]}),
        Iterant(G, {"B": [1, 0, 0], "A": [0, 0, 1]}),
        Iterant(G, {"B": [i, 0, 0], "A": [0, 0, -i]}),
        Iterant(G, {"A": [0, 1, 0], "B": [0, 0, 1]}),
        Iterant(G, {"A": [0, -i, 0], "B": [0, 0, i]}),
        Iterant(G, {"1": [1, 1, -2]}).scale(r3.inv()),
    )
    return GellMannSet(lam, order)


class StructureConstants:
    """Totally antisymmetric f_abc, stored on sorted index triples."""

    def __init__(self, entries: dict[tuple[int, int, int], Cyclotomic]):
        self.entries = {k: v for k, v in entries.items() if v}

    def __call__(self, a: int, b: int, c: int) -> Cyclotomic:
        key = (a, b, c)
        if len(set(key)) < 3:
            return as_scalar(0)
        s = tuple(sorted(key))
        val = self.entries.get(s, as_scalar(0))
        # parity of the sorting permutation
        inversions = sum(1 for x in range(3) for y in range(x + 1, 3) if key[x] > key[y])
        return -val if inversions % 2 else val

    def nonzero(self) -> list[tuple[tuple[int, int, int], Cyclotomic]]:
        return sorted(self.entries.items())

    def is_antisymmetric(self) -> bool:
        for key in self.entries:
            base = self(*key)
            for p in permutations(range(3)):
                perm = tuple(key[k] for k in p)
                inv = sum(1 for x in range(3) for y in range(x + 1, 3) if p[x] > p[y])
                want = -base if inv % 2 else base
                if self(*perm) != want:
                    return False
        return True

    def table(self) -> list[dict]:
        return [
            {"abc": list(k), "value": v, "approx": v.approx()} for k, v in self.nonzero()
        ]


def derive_structure_constants(gm: GellMannSet) -> StructureConstants:
    """f_abc = -2i tr([F_a, F_b] F_c); raises NotClosedError on a nonzero residual."""
    F = gm.F
    i = zeta(gm.order, gm.order // 4)
    m2i = -2 * i
    entries = {}
    for a in range(8):
        for b in range(a + 1, 8):
            comm = F[a].commutator(F[b])
            coeffs = [m2i * (comm * F[c]).trace() for c in range(8)]
            residual = comm
            for c in range(8):
                if coeffs[c]:
                    residual = residual - F[c].scale(i * coeffs[c])
            if residual:
                raise NotClosedError(
                    f"[F{a + 1}, F{b + 1}] leaves the span of the generators: residual {residual}"
                )
            for c in range(b + 1, 8):
                if coeffs[c]:
                    entries[(a + 1, b + 1, c + 1)] = coeffs[c]
    return StructureConstants(entries)


# the commonly tabulated nonzero values (f458 and f678 handled by radical_report)
REFERENCE_F = {
    (1, 2, 3): "1",
    (1, 4, 7): "1/2",
    (1, 5, 6): "-1/2",
    (2, 4, 6): "1/2",
    (2, 5, 7): "1/2",
    (3, 4, 5): "1/2",
    (3, 6, 7): "-1/2",
}


def compare_reference(f: StructureConstants) -> dict[tuple[int, int, int], tuple[Cyclotomic, Cyclotomic, bool]]:
    """(expected, derived, equal) for every tabulated entry."""
    out = {}
    for key, want in REFERENCE_F.items():
        w = as_scalar(want)
        got = f(*key)
        out[key] = (w, got, got == w)
    return out


def radical_report(f: StructureConstants) -> dict[str, dict]:
    """Which radical f458 and f678 equal: sqrt(3)/2 or sqrt(3/2).

    sqrt(3/2) is not in any field holding i and sqrt(3) here, so it is tested
    through its square.
    """
    half_r3 = sqrt3() / 2
    out = {}
    for key in ((4, 5, 8), (6, 7, 8)):
        v = f(*key)
        if v == half_r3:
            verdict = "sqrt(3)/2"
        elif v == -half_r3:
            verdict = "-sqrt(3)/2"
        elif v * v == as_scalar("3/2"):
            verdict = "sqrt(3/2)"
        else:
            verdict = "neither"
        out["f" + "".join(map(str, key))] = {
            "value": v,
            "approx": v.approx(),
            "equals_sqrt3_over_2": v == half_r3,
            "equals_sqrt_3_over_2": v * v == as_scalar("3/2") and complex(v).real > 0,
            "verdict": verdict,
        }
    return out


# -- Cartan-Weyl -------------------------------------------------------------


class CartanWeyl(NamedTuple):
    Tp: Iterant
    Tm: Iterant
    Up: Iterant
    Um: Iterant
    Vp: Iterant
    Vm: Iterant
    T3: Iterant
    Y: Iterant


def cartan_weyl(gm: GellMannSet) -> CartanWeyl:
    """Ladder elements from the F_a: T = F1 +- iF2, U = F6 +- iF7, V = F4 +- iF5."""
    F = gm.F
    i = zeta(gm.order, gm.order // 4)
    return CartanWeyl(
        F[0] + F[1].scale(i),
        F[0] - F[1].scale(i),
        F[5] + F[6].scale(i),
        F[5] - F[6].scale(i),
        F[3] + F[4].scale(i),
        F[3] - F[4].scale(i),
        F[2],
        F[7].scale(2 / sqrt3()),
    )


def _cw_iterant_forms() -> CartanWeyl:
    G = c3()
    return CartanWeyl(
        Iterant(G, {"A": [1, 0, 0]}),
        Iterant(G, {"B": [0, 1, 0]}),
        Iterant(G, {"A": [0, 1, 0]}),
        Iterant(G, {"B": [0, 0, 1]}),
        Iterant(G, {"A": [0, 0, 1]}),
        Iterant(G, {"B": [1, 0, 0]}),
        Iterant(G, {"1": ["1/2", "-1/2", 0]}),
        Iterant(G, {"1": [1, 1, -2]}).scale(sqrt3().inv()),
    )


def cartan_weyl_identities(gm: GellMannSet) -> dict[str, tuple[Iterant, Iterant, bool]]:
    """(lambda combination, direct iterant form, equal) for all eight elements."""
    derived = cartan_weyl(gm)
    direct = _cw_iterant_forms()
    names = ["T+", "T-", "U+", "U-", "V+", "V-", "T3", "Y"]
    return {n: (x, y, x == y) for n, x, y in zip(names, derived, direct)}


# -- transpositions ----------------------------------------------------------


class Transpositions(NamedTuple):
    P: Iterant
    Q: Iterant
    R: Iterant


def transposition_embedding(gm: GellMannSet | None = None) -> Transpositions:
    """P = [0,0,1] + T+ + T-, Q = [1,0,0] + U+ + U-, R = [0,1,0] + V+ + V-."""
    G = c3()
    cw = _cw_iterant_forms() if gm is None else cartan_weyl(gm)
    return Transpositions(
        Iterant(G, {"1": [0, 0, 1]}) + cw.Tp + cw.Tm,
        Iterant(G, {"1": [1, 0, 0]}) + cw.Up + cw.Um,
        Iterant(G, {"1": [0, 1, 0]}) + cw.Vp + cw.Vm,
    )


def transposition_relations(tr: Transpositions) -> dict[str, bool]:
    P, Q, R = tr
    G = P.group
    one = Iterant.unit(G)
    A = Iterant.element(G, "A")
    B = Iterant.element(G, "B")
    six = [one, A, B, P, Q, R]
    closed = all(any(x * y == z for z in six) for x in six for y in six)
    return {
        "P^2 = 1": P * P == one,
        "Q^2 = 1": Q * Q == one,
        "R^2 = 1": R * R == one,
        "A = QP": Q * P == A,
        "B = PQ": P * Q == B,
        "R = PQP": P * Q * P == R,
        "R = QPQ": Q * P * Q == R,
        "{1,A,B,P,Q,R} closed": closed,
    }
