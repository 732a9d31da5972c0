"""Construction of the new labeling from the superposition transforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .. import kterm as K
from ..errors import InternalError
from ..superpose import (
    SplitContext,
    essential,
    lambda_k,
    psi_k,
    reduced_form,
    rho_k,
    split,
    theta_k,
)
from ..verify import Report
from .borders import ReductionContext
from .graph import GraphSystem, term_value


def validate_eta_k(
    g: GraphSystem, eta_k: Mapping[str, K.KTerm], ctx: ReductionContext
) -> Report:
    """Check the assumptions placed on the labeling that feeds the construction."""
    rep = Report()
    k = ctx.k
    for x in g.elements():
        t, t2 = g.eta[x], eta_k.get(x)
        if t2 is None:
            rep.add("eta_k", x, False, witness="missing label")
            continue
        fin = K.is_finite(t)
        ok, why = True, ""
        if fin and t2 != t:
            ok, why = False, f"finite label {K.to_text(t)} replaced by {K.to_text(t2)}"
        elif not fin and K.is_finite(t2):
            ok, why = False, "infinite label replaced by a finite one"
        elif K.i_k_term(t, k) != K.i_k_term(t2, k):
            ok, why = False, f"prefix of length {k} differs"
        elif K.t_k_term(t, k) != K.t_k_term(t2, k):
            ok, why = False, f"suffix of length {k} differs"
        elif term_value(g.S, g.delta, t2) != g.phi[x]:
            ok, why = False, "value differs from phi"
        rep.add("eta_k", x, ok, witness=why)
    for v in g.vertices:
        tv = K.t_k_term(g.eta[v], k)
        z = ctx.z(v)
        y = ctx.border_of(v)
        xlen = ctx.Q - len(z)
        ok = tv.endswith(y + z) and xlen >= 1 and len(tv) == xlen + ctx.M + len(z)
        rep.add("eq2", v, ok, witness=f"t_v={tv!r}, y_v={y!r}, z_v={z!r}")
    return rep


def tau_vertex(tk_i: str, tk_t: str, sctx: SplitContext) -> tuple[K.KTerm, K.KTerm]:
    return lambda_k(tk_i, sctx), rho_k(tk_t, sctx)


@dataclass(frozen=True)
class EdgeSplit:
    """tau_1 of an infinite edge together with the data that produced it."""

    beta1: K.KTerm
    beta2: K.KTerm
    m: int
    reduced: object


def tau_edge_infinite(t_v: str, i_e: str, sctx: SplitContext) -> EdgeSplit:
    k = sctx.k
    w = t_v + i_e
    rf = reduced_form(w, sctx)
    js = [rf.e(n).j for n in rf.anchors] + [rf.e(rf.r).j]
    m = None
    for idx in range(rf.q):
        if js[idx] <= k < js[idx + 1]:
            m = idx + 1
            break
    if m is None:
        raise InternalError(f"no split index for t_v i_e = {w!r} (j's {js})")
    parts1, parts2 = [], []
    for p in range(1, rf.q + 1):
        e = K.omega(K.word(rf.e(rf.anchors[p - 1]).word))
        lo, hi = js[p - 1], js[p]
        fb = rf.fbars[p - 1]
        if p < m:
            parts1 += [e, K.word(fb)]
        elif p == m:
            cut = k - lo
            parts1 += [e, K.word(fb[:cut])]
            parts2.append(K.word(fb[cut:]))
        else:
            parts2 += [e, K.word(fb)]
    return EdgeSplit(K.mul(*parts1), K.mul(*parts2), m, rf)


@dataclass
class TauDecomposition:
    tau1: dict = field(default_factory=dict)
    tau2: dict = field(default_factory=dict)
    tau3: dict = field(default_factory=dict)
    eta_prime: dict = field(default_factory=dict)
    edge_splits: dict = field(default_factory=dict)


def build_eta_prime(
    g: GraphSystem, eta_k: Mapping[str, K.KTerm], ctx: ReductionContext, sctx: SplitContext
) -> tuple[TauDecomposition, Report]:
    """The three components on every element, plus the per-edge lemma checks."""
    k = ctx.k
    out = TauDecomposition()
    rep = Report()
    ik = {x: K.i_k_term(eta_k[x], k) for x in g.elements()}
    tk = {x: K.t_k_term(eta_k[x], k) for x in g.elements()}
    for v in g.vertices:
        t1, t3 = tau_vertex(ik[v], tk[v], sctx)
        out.tau1[v], out.tau3[v] = t1, t3
        out.tau2[v] = theta_k(eta_k[v], sctx)
    for e in g.edges:
        lab = eta_k[e.id]
        if K.is_finite(lab):
            out.tau1[e.id], out.tau2[e.id], out.tau3[e.id] = lab, K.ONE, K.ONE
            continue
        sp = tau_edge_infinite(tk[e.source], ik[e.id], sctx)
        out.edge_splits[e.id] = sp
        out.tau1[e.id] = sp.beta2
        out.tau2[e.id] = theta_k(lab, sctx)
        out.tau3[e.id] = rho_k(tk[e.id], sctx)
    for x in g.elements():
        out.eta_prime[x] = K.normalize(K.mul(out.tau1[x], out.tau2[x], out.tau3[x]))
    rep.extend(lemma2_checks(g, out, ik, tk, sctx))
    rep.extend(letter_edge_checks(g, eta_k, ctx, out, tk, sctx))
    return out, rep


def lemma2_checks(g, out: TauDecomposition, ik, tk, sctx) -> Report:
    rep = Report()
    for e in g.edges:
        sp = out.edge_splits.get(e.id)
        if sp is None:
            continue
        v = e.source
        theta = K.normalize(theta_k(K.word(tk[v] + ik[e.id]), sctx))
        ok_form = sp.reduced.to_term() == theta
        ok_b1 = K.normalize(sp.beta1) == K.normalize(out.tau3[v])
        ok_prod = K.normalize(K.mul(out.tau3[v], out.tau1[e.id])) == theta
        a = term_value(g.S, g.delta, out.tau1[e.id])
        b = term_value(g.S, g.delta, lambda_k(ik[e.id], sctx))
        rep.add("lemma2.theta", e.id, ok_form and ok_b1 and ok_prod,
                witness=f"beta1={K.to_text(sp.beta1)}, tau3v={K.to_text(out.tau3[v])}")
        rep.add("lemma2.value", e.id, a == b, witness=f"{a} != {b}")
    return rep


def letter_edge_checks(g, eta_k, ctx: ReductionContext, out, tk, sctx) -> Report:
    """The two cases of a letter edge ``v -a-> w``."""
    rep = Report()
    for e in g.edges:
        lab = eta_k[e.id]
        if not K.is_finite(lab):
            continue
        a = K.as_word(lab)
        v, w = e.source, e.target
        zv, zw = ctx.z(v), ctx.z(w)
        t3v, t3w = out.tau3[v], out.tau3[w]
        if zv + a == zw:
            th = K.normalize(psi_k(tk[v] + a, sctx))
            ev = essential(tk[v], sctx)
            ok = th == K.normalize(K.omega(K.word(ev.word))) and K.normalize(t3w) == K.normalize(
                K.mul(t3v, lab)
            )
            rep.add("letter.same", e.id, ok, witness=f"theta={K.to_text(th)}")
        else:
            cls = ctx.class_of(v)
            u = cls.root
            ok = cls.periodic and zv + a == u and zw == ""
            ok = ok and K.equivalent(K.mul(K.word(u), t3w), K.mul(t3v, lab))
            rep.add("letter.wrap", e.id, ok, witness=f"z_v={zv!r}, a={a!r}, z_w={zw!r}")
    return rep


def split_dump(w: str, sctx: SplitContext) -> dict:
    sp = split(w, sctx)
    e = essential(w, sctx)
    return {
        "word": w, "s": sp.s, "left": sp.left, "right": sp.right,
        "periodic": sp.periodic, "root": sp.root, "essential": [e.i, e.j, e.word],
    }
