"""End-to-end run: simplify, compute constants, build, lift and verify."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .. import kterm as K
from ..errors import InputError
from ..verify import (
    SL,
    Report,
    VarietyBackend,
    check_C1,
    check_C2,
    check_C3,
    check_solution,
)
from .borders import ReductionContext, compute_borders, compute_constants, split_context
from .graph import GraphSystem, LiftRecipe, simplify
from .tau import TauDecomposition, build_eta_prime, validate_eta_k


@dataclass
class PipelineResult:
    original: GraphSystem
    simplified: GraphSystem
    recipe: LiftRecipe
    ctx: ReductionContext
    tau: TauDecomposition
    eta_prime: dict
    report: Report
    kmax: int
    stages: list = field(default_factory=list)


def verification(
    g: GraphSystem,
    labels: Mapping[str, K.KTerm],
    ctx: ReductionContext,
    V: VarietyBackend,
    kmax: int,
    c2_exempt=(),
) -> Report:
    rep = Report()
    rep.extend(check_solution(g, labels, V, kmax))
    rep.extend(check_C1(g, labels))
    rep.extend(check_C2(g, labels, c2_exempt))
    rep.extend(check_C3(g, labels, ctx.L))
    return rep


def c2_exempt_vertices(g: GraphSystem, ctx: ReductionContext) -> list[str]:
    """Vertices of the original system whose class got a non-periodic representative."""
    roots = {c.root for c in ctx.classes if not c.periodic}
    if not roots:
        return []
    out = []
    for v in g.vertices:
        t = g.eta[v]
        if not K.is_finite(t) and K.p_D(t, g.alphabet).root in roots:
            out.append(v)
    return out


def prepare(g: GraphSystem, ecap: int | None = None):
    simple, recipe = simplify(g)
    classes = compute_borders(simple)
    ctx = compute_constants(simple, classes, original=g, ecap=ecap)
    return simple, recipe, ctx


def pipeline(
    g: GraphSystem,
    eta_k: Mapping[str, K.KTerm] | None = None,
    V: VarietyBackend = SL,
    kmax: int | None = None,
    ecap: int | None = None,
    check_input: bool = True,
) -> PipelineResult:
    simple, recipe, ctx = prepare(g, ecap)
    kmax = 2 * ctx.k if kmax is None else kmax
    report = Report()
    if check_input:
        pre = check_solution(g, g.eta, V, kmax)
        bad = pre.failures()
        if bad:
            r = bad[0]
            raise InputError(
                f"input labeling is not a solution: {r.check} on {r.element}"
                + (f" at k'={r.k}" if r.k else "") + f" ({r.witness})"
            )
    eta_k = dict(simple.eta) if eta_k is None else dict(eta_k)
    val = validate_eta_k(simple, eta_k, ctx)
    report.extend(val)
    sctx = split_context(simple, ctx)
    if not val.ok:
        return PipelineResult(g, simple, recipe, ctx, TauDecomposition(), {}, report, kmax,
                              ["simplify", "constants", "validate"])
    tau, build_rep = build_eta_prime(simple, eta_k, ctx, sctx)
    report.extend(build_rep)
    lifted = recipe.lift(tau.eta_prime)
    eta_prime = {x: lifted[x] for x in g.elements()}
    report.extend(verification(g, eta_prime, ctx, V, kmax, c2_exempt_vertices(g, ctx)))
    return PipelineResult(g, simple, recipe, ctx, tau, eta_prime, report, kmax,
                          ["simplify", "constants", "validate", "build", "lift", "verify"])
