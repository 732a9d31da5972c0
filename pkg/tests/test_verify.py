import itertools
import random

from vdreduce import finsemi as F
from vdreduce import kterm as K
from vdreduce.io import graph_from_dict
from vdreduce.reduce import pipeline
from vdreduce.superpose import phi_k_term
from vdreduce.verify import (
    G,
    SL,
    VarietyBackend,
    check_C1,
    check_C2,
    check_C3,
    check_solution,
    dk_satisfies,
    g_satisfies,
    kk_satisfies,
    sample_refute,
    sl_satisfies,
    vdk_satisfies,
)
from support import fixture_graph, random_term

P = K.parse
Z3 = F.cyclic_group(3)


def test_dk_kk():
    assert dk_satisfies(P("(ab)^w"), P("a(ab)^w"), 2)
    assert not dk_satisfies(P("a"), P("b"), 1)
    assert not kk_satisfies(P("a(ab)^w"), P("(ab)^w"), 2)


def test_sl():
    assert sl_satisfies(P("(ab)^w"), P("(ba)^w b"))
    assert not sl_satisfies(P("a"), P("ab"))
    a, b = phi_k_term(P("(ab)^w(ab)^w"), 1), phi_k_term(P("(ab)^w"), 1)
    assert K.content(a) == K.content(b) == {"ab", "ba"}


def test_g():
    assert g_satisfies(P("(a)^w-1 a b"), P("b"))
    assert g_satisfies(P("(ab)^w-1"), P("(b)^w-1(a)^w-1"))
    assert not g_satisfies(P("ab"), P("ba"))


def test_vdk():
    assert vdk_satisfies(SL, P("(ab)^w(ab)^w"), P("(ab)^w"), 2)
    for V in (SL, G):
        assert not vdk_satisfies(V, P("(ab)^w a"), P("(ab)^w b"), 1)
    # t_2 of a^w b a^w is "aa", of a^w b it is "ab"
    assert not vdk_satisfies(SL, P("(a)^w b (a)^w"), P("(a)^w b"), 2)


def test_check_solution_f1():
    g = fixture_graph("f1")
    assert check_solution(g, g.eta, SL, 7).ok
    swapped = dict(g.eta)
    swapped["e2"] = P("a")
    rep = check_solution(g, swapped, SL, 7)
    assert not rep.ok
    assert {r.element for r in rep.failures()} == {"e2"}
    empty = graph_from_dict({"vertices": [], "edges": []}, g.S, g.delta)
    assert check_solution(empty, {}, SL, 7).ok
    assert check_solution(empty, {}, SL, 7).records == []


def test_conditions_on_f1():
    g = fixture_graph("f1")
    r = pipeline(g)
    eta = r.eta_prime
    L = r.ctx.L
    assert check_C1(g, eta).ok and check_C2(g, eta).ok and check_C3(g, eta, L).ok
    bad = dict(eta)
    bad["v1"] = K.mul(P("b"), K.strip_prefix(eta["v1"], "a"))
    assert not check_C3(g, bad, L).ok
    bad = dict(eta)
    bad["e2"] = P("a")
    assert not check_C1(g, bad).ok


def test_sample_refute():
    d = VarietyBackend("sample", (Z3,))
    assert sample_refute(P("ab"), P("ba"), d) is None
    # search the 3-element tables for one that is not commutative
    nc = next(S for S in F.all_tables(3)
              if any(S.mul(x, y) != S.mul(y, x) for x in range(3) for y in range(3)))
    hit = sample_refute(P("ab"), P("ba"), VarietyBackend("sample", (Z3, nc)))
    assert hit is not None and hit[0] == 1
    t = P("(ab)^w a")
    assert sample_refute(t, t, VarietyBackend("sample", (nc,))) is None


def test_sample_backend_is_refutation_only():
    V = VarietyBackend("sample", (Z3,))
    assert V.satisfies(P("ab"), P("ba")) is None
    assert V.satisfies(P("ab"), P("a")) is False
    r = pipeline(fixture_graph("f1"), V=V)
    assert r.report.ok
    assert {x.verdict for x in r.report.by_check("VD")} == {"unknown"}


def test_sl_eq1_matches_semilattice_evaluation():
    # Sl |= Phi_k pi = Phi_k rho decided by content; cross-check a sample of
    # semilattice evaluations of the superposition images.
    rng = random.Random(2)
    S = F.min_semilattice(2)
    for _ in range(150):
        pi, rho = random_term(rng, 1, width=2), random_term(rng, 1, width=2)
        k = rng.randint(1, 3)
        a, b = phi_k_term(pi, k), phi_k_term(rho, k)
        if K.is_one(a) or K.is_one(b):
            continue
        syms = sorted(K.content(a) | K.content(b))
        agree = all(
            F.eval_kterm(S, dict(zip(syms, img)), a) == F.eval_kterm(S, dict(zip(syms, img)), b)
            for img in itertools.product(range(2), repeat=len(syms))
        )
        assert agree == sl_satisfies(a, b)


def test_dk_monotone():
    rng = random.Random(4)
    for _ in range(200):
        pi, rho = random_term(rng, 2), random_term(rng, 2)
        for k in range(1, 6):
            if dk_satisfies(pi, rho, k + 1):
                assert dk_satisfies(pi, rho, k)
