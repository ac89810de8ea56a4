"""
The eleven acceptance criteria, each checked exactly.

Every criterion prints one PASS/FAIL line (also collected into the pytest
terminal summary).  Run directly with ``python3 tests/test_acceptance.py``
for the report alone.
"""

import contextlib
import io
import random
import sys
import time
from fractions import Fraction

import pytest

from iterant import physics, su3
from iterant.braids import FramedBraid, embed_su3, particle, rho
from iterant.cli import main as cli_main
from iterant.errors import ParseError
from iterant.evaluator import evaluate, format_value, make_context, normalize
from iterant.expr import parse
from iterant.groups import cyclic, klein4, symmetric
from iterant.iterants import Iterant, conj2, det2, from_matrix
from iterant.matrix import Matrix, rank
from iterant.scalars import Cyclotomic, zeta

from conftest import ACCEPTANCE_LINES
from golden import CORPUS

SEED = 20240601


def _rand_cyc(rng, order=12):
    return Cyclotomic(order, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])


def _rand_iterant(G, rng):
    return Iterant(G, {g: [_rand_cyc(rng) for _ in range(G.degree)] for g in range(G.order) if rng.random() < 0.8})


def criterion_1():
    ctx = make_context("c2")
    v = normalize(evaluate(parse("([1,-1]h)^2"), ctx))
    return v == -1, f"([1,-1]h)^2 = {format_value(v, ctx)}"


def criterion_2():
    rng = random.Random(SEED)
    bad = []
    for G in (cyclic(2), cyclic(3), cyclic(6), klein4(), symmetric(3)):
        for _ in range(100):
            x, y = _rand_iterant(G, rng), _rand_iterant(G, rng)
            if (x * y).to_matrix() != x.to_matrix() * y.to_matrix() or from_matrix(x.to_matrix(), G) != x:
                bad.append(G.name)
                break
    return not bad, "C2, C3, C6, klein4, S3 x 100 pairs" + (f"; broken for {bad}" if bad else "")


def criterion_3():
    rng = random.Random(SEED + 3)
    G = physics.eta_group()
    for _ in range(100):
        z, w = _rand_iterant(G, rng), _rand_iterant(G, rng)
        if det2(z * w) != det2(z) * det2(w) or z * conj2(z) != conj2(z) * z:
            return False, f"witness z = {z}, w = {w}"
    return True, "100 pairs: D(ZW) = D(Z)D(W), Z conj(Z) = conj(Z) Z"


def criterion_4():
    failing = []
    triples = {"klein4": physics.quaternions_klein(), "iota": physics.quaternions_iota(),
               "signed": physics.quaternions_signed_perm()}
    for name, q in triples.items():
        m1 = -Iterant.unit(q.I.group)
        rels = [q.I * q.I == m1, q.J * q.J == m1, q.K * q.K == m1, q.I * q.J * q.K == m1,
                q.I * q.J == q.K, q.J * q.I == -q.K]
        if not all(rels):
            failing.append(name)
    same = triples["klein4"].matrices() == triples["signed"].matrices()
    return not failing and same, "three constructions, klein4 and signed matrices " + (
        "identical" if same else "differ") + (f"; failing {failing}" if failing else "")


def criterion_5():
    ok = True
    for n in range(1, 5):
        b = physics.projector_basis(n)
        total = Matrix.zero(n)
        for p in range(n):
            total = total + b.projector(p)
            for q in range(n):
                for r in range(n):
                    for s in range(n):
                        ok &= b(p, q) * b(r, s) == (b(p, s) if q == r else Matrix.zero(n))
        ok &= total == Matrix.identity(n)
    f = physics.fermion_ops()
    one = Matrix.identity(2)
    ok &= f.c.anticommutator(f.cdag) == one and (f.c * f.c).is_zero() and f.N * f.N == f.N
    e1, e2 = physics.majorana_pair()
    ok &= e1 * e1 == one and e2 * e2 == one and e1.anticommutator(e2).is_zero()
    return ok, "projectors n <= 4, {c,c^dag} = 1, c^2 = 0, N^2 = N, eta1^2 = eta2^2 = 1, {eta1,eta2} = 0"


def criterion_6():
    bad = []
    for n in (2, 3, 5, 7):
        e, eta = physics.parafermion_pair(n)
        one = Matrix.identity(n)
        ok = e ** n == one and eta ** n == one and e * eta == (eta * e).scale(zeta(n))
        ok = ok and rank([(e ** a) * (eta ** b) for a in range(n) for b in range(n)]) == n * n
        if not ok:
            bad.append(n)
    return not bad, "n = 2, 3, 5, 7" + (f"; failing n = {bad}" if bad else "")


def criterion_7():
    gm = su3.gell_mann()
    gram = gm.gram()
    gram_ok = all(gram[a][b] == (2 if a == b else 0) for a in range(8) for b in range(8))
    f = su3.derive_structure_constants(gm)
    cmp = su3.compare_reference(f)
    table_bad = [f"f{''.join(map(str, k))} = {got} (want {want})" for k, (want, got, ok) in cmp.items() if not ok]
    rad = su3.radical_report(f)
    radicals = ", ".join(f"{k} = {v['value']} [{v['verdict']}]" for k, v in rad.items())
    cw = su3.cartan_weyl_identities(gm)
    cw_bad = [f"{k}: {x} vs {y}" for k, (x, y, ok) in cw.items() if not ok]
    ok = gram_ok and not table_bad and not cw_bad
    parts = [f"gram {'ok' if gram_ok else 'BAD'}", radicals]
    if table_bad:
        parts.append("table mismatches " + "; ".join(table_bad))
    if cw_bad:
        parts.append("Cartan-Weyl mismatches " + "; ".join(cw_bad))
    return ok, " | ".join(parts)


def criterion_8():
    rels = su3.transposition_relations(su3.transposition_embedding(su3.gell_mann()))
    bad = [k for k, v in rels.items() if not v]
    return not bad, "P^2 = Q^2 = R^2 = 1, A = QP, B = PQ, R = PQP = QPQ, closure" + (f"; failing {bad}" if bad else "")


def fixed_prefix_breaks_braid_relation():
    t = zeta(6)
    s = lambda k: FramedBraid.generator(3, k)
    return rho(s(1) * s(2) * s(1), t, "fixed-prefix") != rho(s(2) * s(1) * s(2), t, "fixed-prefix")


def criterion_9():
    t = zeta(6)
    s = lambda k, sg=1: FramedBraid.generator(3, k, sg)
    ep, em, gamma = particle("e+"), particle("e-"), particle("gamma")
    checks = {
        "braid relation": rho(s(1) * s(2) * s(1), t) == rho(s(2) * s(1) * s(2), t),
        "inverse pairs": all(rho(s(k), t) * rho(s(k, -1), t) == 1 for k in (1, 2)),
        "e+e- = gamma (FB3)": ep * em == gamma,
        "e+e- under rho": rho(ep, t) * rho(em, t) == rho(gamma, t) == 1,
        "e+e- under embed_su3": embed_su3(ep, t) * embed_su3(em, t) == embed_su3(gamma, t) == 1,
        "fixed-prefix reading fails as expected": fixed_prefix_breaks_braid_relation(),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "; ".join(checks) + (f"; failing {bad}" if bad else "")


def criterion_10():
    rng = random.Random(SEED + 10)
    for _ in range(100):
        T, X, Y, Z = (Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(4))
        H = physics.minkowski_observable(T, X, Y, Z)
        want_det = T * T - X * X - Y * Y - Z * Z
        # (x - T)^2 - (X^2 + Y^2 + Z^2), constant term first
        want_cp = [T * T - (X * X + Y * Y + Z * Z), -2 * T, 1]
        if det2(H) != want_det or physics.minkowski_charpoly(H) != want_cp:
            return False, f"witness (T,X,Y,Z) = {(T, X, Y, Z)}"
    return True, "100 random rational 4-tuples"


MALFORMED = ["[x,y", "(1 + 2", "1/", "1/0", "a ^ x", "1 +", "", "2 $ 3", "{1,2", "comm(a b)"]


def criterion_11():
    bad = []
    for context, text, expected in CORPUS:
        node = parse(text)
        ctx = make_context(context, None, None, node)
        value = normalize(evaluate(node, ctx))
        printed = format_value(value, ctx)
        node2 = parse(printed)
        again = normalize(evaluate(node2, make_context(context, ctx.order, None, node2)))
        if printed != expected or again != value:
            bad.append(text)
    positioned = 0
    for text in MALFORMED:
        try:
            parse(text)
        except ParseError as exc:
            positioned += exc.line >= 1 and exc.column >= 0 and f"line {exc.line}, column {exc.column}" in str(exc)
    codes = []
    for text in MALFORMED:
        with contextlib.redirect_stderr(io.StringIO()), contextlib.redirect_stdout(io.StringIO()):
            codes.append(cli_main(["eval", text]))
    ok = not bad and positioned == len(MALFORMED) and all(c == 2 for c in codes)
    detail = f"{len(CORPUS)} golden expressions round-trip, {positioned}/{len(MALFORMED)} malformed inputs positioned, exit codes {sorted(set(codes))}"
    if bad:
        detail += f"; failing {bad}"
    return ok, detail


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 12)}
TITLES = {
    1: "iterant imaginary unit",
    2: "matrix isomorphism",
    3: "determinant multiplicativity",
    4: "quaternions three ways",
    5: "projector/fermion/Majorana",
    6: "parafermion relations",
    7: "su(3) exact reproduction",
    8: "transposition embedding",
    9: "braid embedding",
    10: "Minkowski observable",
    11: "parser contract",
}


def evaluate_criterion(k):
    start = time.perf_counter()
    ok, detail = CRITERIA[k]()
    elapsed = time.perf_counter() - start
    line = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {TITLES[k]} ({elapsed:.2f}s): {detail}"
    ACCEPTANCE_LINES[k] = line
    print(line)
    return ok, elapsed


@pytest.mark.parametrize("k", [k for k in CRITERIA if k != 7])
def test_criterion(k):
    ok, _ = evaluate_criterion(k)
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="with lambda5 = [i,0,0]B + [0,0,-i]A, f156, f257 and f345 come out with the opposite sign, "
    "and 2/sqrt3 F8 is [1/3,1/3,-2/3], not (1/sqrt3)[1,1,-2]",
)
def test_criterion_7():
    ok, _ = evaluate_criterion(7)
    assert ok


def test_criterion_7_failure_is_exactly_the_known_one():
    # what does hold, and precisely what does not
    gm = su3.gell_mann()
    assert all(gm.gram()[a][b] == (2 if a == b else 0) for a in range(8) for b in range(8))
    f = su3.derive_structure_constants(gm)
    bad = sorted(k for k, (_, _, ok) in su3.compare_reference(f).items() if not ok)
    assert bad == [(1, 5, 6), (2, 5, 7), (3, 4, 5)]
    assert [k for k, (_, _, ok) in su3.cartan_weyl_identities(gm).items() if not ok] == ["Y"]
    rad = su3.radical_report(f)
    assert rad["f458"]["verdict"] == "-sqrt(3)/2" and rad["f678"]["verdict"] == "sqrt(3)/2"


@pytest.mark.xfail(strict=True, reason="a [t,t,1] framing on every crossing breaks the braid relation")
def test_fixed_prefix_reading_satisfies_braid_relation():
    assert not fixed_prefix_breaks_braid_relation()


def test_total_runtime_budget():
    start = time.perf_counter()
    for k in CRITERIA:
        CRITERIA[k]()
    assert time.perf_counter() - start < 30


if __name__ == "__main__":
    results = [evaluate_criterion(k)[0] for k in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
