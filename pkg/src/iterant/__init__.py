"""
Exact iterant algebras over finite groups.

Scalars live in cyclotomic fields Q(zeta_N) (with Laurent polynomials in a
framing variable t where needed), iterants are vector-weighted sums of group
elements, and the physics, su3 and braids modules build the standard
constructions on top.  Everything is exact; there are no floating tolerances.
"""

from .errors import (
    DecompositionError,
    DegreeMismatchError,
    EvalError,
    GroupError,
    GroupMismatchError,
    IterantError,
    MalformedScalarError,
    MissingRootError,
    NotClosedError,
    ParseError,
    SpecializationError,
    StrandMismatchError,
    UnboundNameError,
    UnknownParticleError,
)
from .scalars import Cyclotomic, LaurentPoly, as_scalar, cyc_make, laurent_specialize, sqrt3, zeta
from .groups import Group, Perm, builtin_group, cyclic, klein4, perm_compose, perm_matrix, symmetric, vector_act, vector_pull
from .matrix import Matrix, rank
from .iterants import (
    Iterant,
    basic_idempotent,
    conj2,
    det2,
    from_matrix,
    it_add,
    it_anticommutator,
    it_commutator,
    it_mul,
    it_scale,
    it_trace,
    to_matrix,
)
from .braids import BraidAlgebraElement, BraidWord, FramedBraid, fb_mul, particle, pi_hat, rho, embed_su3, verify_factorization
from .expr import parse
from .evaluator import eval_text, make_context
from .suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "DecompositionError",
    "DegreeMismatchError",
    "EvalError",
    "GroupError",
    "GroupMismatchError",
    "IterantError",
    "MalformedScalarError",
    "MissingRootError",
    "NotClosedError",
    "ParseError",
    "SpecializationError",
    "StrandMismatchError",
    "UnboundNameError",
    "UnknownParticleError",
    "Cyclotomic",
    "LaurentPoly",
    "as_scalar",
    "cyc_make",
    "laurent_specialize",
    "sqrt3",
    "zeta",
    "Group",
    "Perm",
    "builtin_group",
    "cyclic",
    "klein4",
    "perm_compose",
    "perm_matrix",
    "symmetric",
    "vector_act",
    "vector_pull",
    "Matrix",
    "rank",
    "Iterant",
    "basic_idempotent",
    "conj2",
    "det2",
    "from_matrix",
    "it_add",
    "it_anticommutator",
    "it_commutator",
    "it_mul",
    "it_scale",
    "it_trace",
    "to_matrix",
    "BraidAlgebraElement",
    "BraidWord",
    "FramedBraid",
    "fb_mul",
    "particle",
    "pi_hat",
    "rho",
    "embed_su3",
    "verify_factorization",
    "parse",
    "eval_text",
    "make_context",
    "run_suite",
]
