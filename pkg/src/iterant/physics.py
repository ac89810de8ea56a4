"""
Quantum constructions built from matrix units and iterants.

Projector algebras, the Pauli/fermion/Majorana operators of a two-level
system, three realisations of the quaternions, clock/shift parafermion pairs
and the Minkowski-point Hermitian observable.  Where an iterant form exists it
is provided next to the matrix form so the two can be compared through
``to_matrix``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import IterantError
from .groups import Group, cyclic, klein4, symmetric
from .iterants import Iterant, det2
from .matrix import Matrix
from .scalars import as_scalar, require_root, zeta

__all__ = [
    "ProjectorBasis",
    "projector_basis",
    "spectral_assemble",
    "PauliOps",
    "pauli_ops",
    "pauli_iterants",
    "FermionOps",
    "fermion_ops",
    "majorana_pair",
    "majorana_iterants",
    "QuaternionTriple",
    "quaternions_klein",
    "quaternions_iota",
    "quaternions_signed_perm",
    "parafermion_pair",
    "parafermion_iterants",
    "minkowski_observable",
    "minkowski_charpoly",
    "eta_group",
    "CONSTRUCTIONS",
    "construct",
]


@lru_cache(maxsize=None)
def eta_group() -> Group:
    """The order-two group {1, h} acting on two slots by the swap h (eta)."""
    return cyclic(2, generator="h")


# -- projectors --------------------------------------------------------------


@dataclass(frozen=True)
class ProjectorBasis:
    """Matrix units U^{pq} = |p><q| for an n-level system (0-based labels)."""

    dimension: int
    units: tuple[tuple[Matrix, ...], ...]

    def __call__(self, p: int, q: int) -> Matrix:
        return self.units[p][q]

    def projector(self, p: int) -> Matrix:
        return self.units[p][p]

    def ket(self, p: int) -> list:
        return [as_scalar(1 if k == p else 0) for k in range(self.dimension)]


def projector_basis(n: int) -> ProjectorBasis:
    if n < 1:
        raise IterantError(f"projector basis needs dimension >= 1, got {n}")
    units = tuple(tuple(Matrix.unit(n, p, q) for q in range(n)) for p in range(n))
    return ProjectorBasis(n, units)


def spectral_assemble(eigenvalues: Sequence, basis: ProjectorBasis) -> Matrix:
    """H = sum_i e_i P_i."""
    if len(eigenvalues) != basis.dimension:
        raise IterantError(
            f"{len(eigenvalues)} eigenvalues for a {basis.dimension}-dimensional basis"
        )
    out = Matrix.zero(basis.dimension)
    for k, e in enumerate(eigenvalues):
        out = out + basis.projector(k).scale(e)
    return out


# -- two-level operators -----------------------------------------------------


class PauliOps(NamedTuple):
    """Unnormalised X, Y, Z and the halved spin-1/2 operators Sx, Sy, Sz."""

    X: Matrix
    Y: Matrix
    Z: Matrix
    Sx: Matrix
    Sy: Matrix
    Sz: Matrix


def pauli_ops() -> PauliOps:
    """Pauli operators from P = U^00, Q = U^11, R = U^01, S = U^10.

    Z = P - Q, Sx = (R + S)/2 and Sy = (R - S)/(2i) are the projector forms;
    X = R + S and Y = -i(R - S) are the unnormalised partners, Sz = Z/2.
    """
    b = projector_basis(2)
    P, Q, R, S = b(0, 0), b(1, 1), b(0, 1), b(1, 0)
    i = zeta(4)
    Z = P - Q
    X = R + S
    Y = (R - S).scale(-i)
    half = as_scalar("1/2")
    return PauliOps(X, Y, Z, X.scale(half), (R - S).scale((2 * i).inv()), Z.scale(half))


def pauli_iterants(order: int = 4) -> tuple[Iterant, Iterant, Iterant]:
    """X = eta, Y = [-i, i] eta, Z = [1, -1] over the swap group."""
    require_root(order, 4, "Pauli Y")
    G = eta_group()
    i = zeta(order, order // 4)
    return (
        Iterant.element(G, "h"),
        Iterant(G, {"h": [-i, i]}),
        Iterant.vector(G, [1, -1]),
    )


class FermionOps(NamedTuple):
    c: Matrix
    cdag: Matrix
    N: Matrix


def fermion_ops() -> FermionOps:
    """Annihilation c = |0><1|, creation c^dag = |1><0| and N = c^dag c.

    c sends |1> to |0> and kills |0>; N projects onto |1>.
    """
    b = projector_basis(2)
    c = b(0, 1)
    cdag = b(1, 0)
    return FermionOps(c, cdag, cdag * c)


def majorana_pair() -> tuple[Matrix, Matrix]:
    """eta1 = R + S and eta2 = i(R - S) with R = U^01, S = U^10."""
    b = projector_basis(2)
    R, S = b(0, 1), b(1, 0)
    return R + S, (R - S).scale(zeta(4))


def majorana_iterants(order: int = 4) -> tuple[Iterant, Iterant]:
    require_root(order, 4, "Majorana pair")
    G = eta_group()
    i = zeta(order, order // 4)
    return Iterant.element(G, "h"), Iterant(G, {"h": [i, -i]})


# -- quaternions -------------------------------------------------------------


@dataclass(frozen=True)
class QuaternionTriple:
    I: Iterant
    J: Iterant
    K: Iterant

    def relations(self) -> dict[str, bool]:
        """Every defining quaternion relation, checked exactly."""
        I, J, K = self.I, self.J, self.K
        m1 = -Iterant.unit(I.group)
        return {
            "I^2 = -1": I * I == m1,
            "J^2 = -1": J * J == m1,
            "K^2 = -1": K * K == m1,
            "IJK = -1": I * J * K == m1,
            "IJ = K": I * J == K,
            "JI = -K": J * I == -K,
            "JK = I": J * K == I,
            "KJ = -I": K * J == -I,
            "KI = J": K * I == J,
            "IK = -J": I * K == -J,
        }

    def matrices(self) -> tuple[Matrix, Matrix, Matrix]:
        return self.I.to_matrix(), self.J.to_matrix(), self.K.to_matrix()


def quaternions_klein() -> QuaternionTriple:
    """I = [1,-1,-1,1]A, J = [1,1,-1,-1]B, K = [1,-1,1,-1]C over the Klein group."""
    G = klein4()
    return QuaternionTriple(
        Iterant(G, {"A": [1, -1, -1, 1]}),
        Iterant(G, {"B": [1, 1, -1, -1]}),
        Iterant(G, {"C": [1, -1, 1, -1]}),
    )


def quaternions_iota(order: int = 4) -> QuaternionTriple:
    """I = iota eps, J = eps eta, K = iota eta with a commuting scalar iota."""
    require_root(order, 4, "iota quaternions")
    G = eta_group()
    iota = zeta(order, order // 4)
    return QuaternionTriple(
        Iterant.vector(G, [iota, -iota]),
        Iterant(G, {"h": [1, -1]}),
        Iterant(G, {"h": [iota, iota]}),
    )


@lru_cache(maxsize=None)
def _s4() -> Group:
    return symmetric(4, natural=True)


# labels of s = (12)(34), l = (13)(24), t = (14)(23) in symmetric(4)
SIGNED_PERM_LABELS = {"s": "p2143", "l": "p3412", "t": "p4321"}


def quaternions_signed_perm() -> QuaternionTriple:
    """I = [+1,-1,-1,+1]s, J = [+1,+1,-1,-1]l, K = [+1,-1,+1,-1]t inside S4."""
    G = _s4()
    lab = SIGNED_PERM_LABELS
    return QuaternionTriple(
        Iterant(G, {lab["s"]: [1, -1, -1, 1]}),
        Iterant(G, {lab["l"]: [1, 1, -1, -1]}),
        Iterant(G, {lab["t"]: [1, -1, 1, -1]}),
    )


# -- parafermions ------------------------------------------------------------


def parafermion_pair(n: int, order: int | None = None) -> tuple[Matrix, Matrix]:
    """Clock e = diag(1, w, ..., w^(n-1)) and shift eta with e eta = w eta e.

    eta sends |k> to |k+1 mod n>, so its ones sit just below the diagonal
    (and in the top-right corner).  The construction is uniform in n;
    n = 2 gives the Clifford pair e eta = -eta e.
    """
    if n < 2:
        raise IterantError(f"parafermion order must be >= 2, got {n}")
    order = n if order is None else order
    require_root(order, n, f"Z_{n} clock")
    w = zeta(order, order // n)
    clock = Matrix.diag([w ** k for k in range(n)])
    shift = Matrix.from_function(n, n, lambda i, j: 1 if i == (j + 1) % n else 0)
    return clock, shift


def parafermion_iterants(n: int, order: int | None = None) -> tuple[Iterant, Iterant]:
    """The same pair over C_n: e = [1, w, ..., w^(n-1)], eta = S^(n-1)."""
    order = n if order is None else order
    require_root(order, n, f"Z_{n} clock")
    G = cyclic(n)
    w = zeta(order, order // n)
    return Iterant.vector(G, [w ** k for k in range(n)]), Iterant.element(G, "S").inverse()


# -- Minkowski observable ----------------------------------------------------


def minkowski_observable(T, X, Y, Z, order: int = 4) -> Iterant:
    """H = [T+X, T-X] + [Y + Z iota, Y - Z iota] eta."""
    require_root(order, 4, "Minkowski observable")
    T, X, Y, Z = (as_scalar(v) for v in (T, X, Y, Z))
    iota = zeta(order, order // 4)
    G = eta_group()
    return Iterant(G, {"1": [T + X, T - X], "h": [Y + Z * iota, Y - Z * iota]})


def minkowski_charpoly(H: Iterant) -> list:
    """det(x - H) for the 2x2 observable, constant term first."""
    return H.to_matrix().charpoly()


# -- registry ----------------------------------------------------------------


def _named_pauli():
    ops = pauli_ops()
    X, Y, Z = pauli_iterants()
    return {**ops._asdict(), "X_iterant": X, "Y_iterant": Y, "Z_iterant": Z}


def _named_fermion():
    return fermion_ops()._asdict()


def _named_majorana():
    e1, e2 = majorana_pair()
    i1, i2 = majorana_iterants()
    return {"eta1": e1, "eta2": e2, "eta1_iterant": i1, "eta2_iterant": i2}


def _named_quaternion(triple: QuaternionTriple):
    return {"I": triple.I, "J": triple.J, "K": triple.K}


def _named_parafermion(n: int):
    e, eta = parafermion_pair(n)
    ei, etai = parafermion_iterants(n)
    return {"e": e, "eta": eta, "e_iterant": ei, "eta_iterant": etai}


def _named_minkowski(args: str):
    vals = [as_scalar(a.strip()) for a in args.split(",")]
    if len(vals) != 4:
        raise IterantError("minkowski needs four arguments T,X,Y,Z")
    H = minkowski_observable(*vals)
    return {"H": H, "det": det2(H)}


CONSTRUCTIONS = {
    "pauli": _named_pauli,
    "fermion": _named_fermion,
    "majorana": _named_majorana,
    "quaternion:klein": lambda: _named_quaternion(quaternions_klein()),
    "quaternion:iota": lambda: _named_quaternion(quaternions_iota()),
    "quaternion:signed": lambda: _named_quaternion(quaternions_signed_perm()),
}


def construct(name: str) -> dict:
    """Resolve a registry name such as ``pauli``, ``parafermion:5`` or ``minkowski(1,0,0,0)``."""
    key = name.strip()
    if key in CONSTRUCTIONS:
        return CONSTRUCTIONS[key]()
    m = re.fullmatch(r"parafermion:(\d+)", key)
    if m:
        return _named_parafermion(int(m.group(1)))
    m = re.fullmatch(r"minkowski\((.*)\)", key)
    if m:
        return _named_minkowski(m.group(1))
    known = sorted(CONSTRUCTIONS) + ["parafermion:n", "minkowski(T,X,Y,Z)"]
    raise IterantError(f"unknown construction {name!r}; known: {', '.join(known)}")
