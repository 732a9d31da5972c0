"""Graph equation systems and the simplification rewrites.

A system is a finite multigraph whose elements (vertices and edges, sharing one
namespace of identifiers) carry a kappa-term label ``eta`` and a semigroup value
``phi``.  Each edge ``e: v -> w`` stands for the equation ``v e = w``.  A
vertex may be labeled by the empty word; its value is then the identity of
``S^1``, written ``None`` when ``S`` has no identity of its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .. import kterm as K
from ..errors import InputError
from ..finsemi import FinSemigroup, GeneratorMap, eval_kterm
from ..wordkit import LeftInfWord


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    target: str


@dataclass(frozen=True, eq=False)
class GraphSystem:
    S: FinSemigroup
    delta: GeneratorMap
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    eta: Mapping[str, K.KTerm]
    phi: Mapping[str, int | None]
    # Lyndon root -> chosen representative of that confinality class
    representatives: Mapping[str, LeftInfWord] = field(default_factory=dict)
    # edge id -> (pi1, pi2) used by the finite-vertex/infinite-edge rewrite
    factorizations: Mapping[str, tuple[K.KTerm, K.KTerm]] = field(default_factory=dict)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.delta.alphabet

    def elements(self) -> list[str]:
        return list(self.vertices) + [e.id for e in self.edges]

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def out_edges(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.source == v]

    def value(self, t: K.KTerm) -> int | None:
        return term_value(self.S, self.delta, t)


def term_value(S: FinSemigroup, delta: GeneratorMap, t: K.KTerm) -> int | None:
    if t == K.ONE:
        return S.one() if S.identity else None
    return eval_kterm(S, delta, t)


def auto_phi(S: FinSemigroup, delta: GeneratorMap, eta: Mapping[str, K.KTerm]) -> dict:
    return {g: term_value(S, delta, t) for g, t in eta.items()}


def structural_problems(g: GraphSystem) -> list[tuple[str, str]]:
    """(element, message) pairs for every well-formedness violation."""
    out = []
    seen = set()
    for x in g.elements():
        if x in seen:
            out.append((x, "duplicate identifier"))
        seen.add(x)
    vs = set(g.vertices)
    for e in g.edges:
        for end in (e.source, e.target):
            if end not in vs:
                out.append((e.id, f"endpoint {end!r} is not a vertex"))
    alpha = set(g.alphabet)
    for x in g.elements():
        if x not in g.eta:
            out.append((x, "no label"))
            continue
        t = g.eta[x]
        bad = sorted(K.content(t) - alpha)
        if bad:
            out.append((x, f"letters outside the alphabet: {bad}"))
        if x not in vs and t == K.ONE:
            out.append((x, "edges must be labeled by non-empty terms"))
        if x not in g.phi:
            out.append((x, "no value"))
    for x in g.eta:
        if x not in seen:
            out.append((x, "label for an unknown element"))
    for eid in g.factorizations:
        if eid not in {e.id for e in g.edges}:
            out.append((eid, "factorization given for an unknown edge"))
    return out


def phi_problems(g: GraphSystem) -> list[tuple[str, str]]:
    out = []
    for x in g.elements():
        want = g.phi[x]
        got = g.value(g.eta[x])
        if got != want:
            out.append((x, f"delta(eta) = {got} but phi = {want}"))
        elif x not in g.vertices and want is None:
            out.append((x, "edge value must lie in S"))
    return out


def check_wellformed(g: GraphSystem) -> None:
    probs = structural_problems(g)
    if not probs:
        probs = phi_problems(g)
    if probs:
        x, msg = probs[0]
        raise InputError(f"{x}: {msg}")


# -- simplification ----------------------------------------------------------


@dataclass
class LiftRecipe:
    """Inverse constructions that carry a labeling of the simplified system back."""

    steps: list = field(default_factory=list)

    def lift(self, labels: Mapping[str, K.KTerm]) -> dict[str, K.KTerm]:
        out = dict(labels)
        for step in reversed(self.steps):
            step(out)
        return out


def _finite(t: K.KTerm) -> bool:
    return K.is_finite(t)


def _keep(ids):
    def step(out, ids=tuple(ids)):
        out.update(ids)
    return step


def default_factorization(pi: K.KTerm) -> tuple[K.KTerm, K.KTerm]:
    """Split an infinite term into two infinite factors.

    The first top-level cut with an (omega-1)-power on both sides is used;
    failing that, the single (omega-1)-power ``x^(w-1)`` is unfolded with
    ``x^(w-1) = (x^(w-1) x) x^(w-1)``.
    """
    fs = K.factors(pi)
    inf = [not _finite(f) for f in fs]
    if not any(inf):
        raise InputError(f"{K.to_text(pi)} is finite")
    for c in range(1, len(fs)):
        if any(inf[:c]) and any(inf[c:]):
            return K.mul(*fs[:c]), K.mul(*fs[c:])
    i = inf.index(True)
    f = fs[i]
    if isinstance(f, K.OmegaMinusOne):
        return K.mul(*fs[:i], f, f.arg), K.mul(f, *fs[i + 1:])
    raise AssertionError("unreachable: infinite factors of a flat product are omega-1 powers")


def simplify(g: GraphSystem) -> tuple[GraphSystem, LiftRecipe]:
    """Rewrite until every vertex is infinite and every finite edge is a letter."""
    check_wellformed(g)
    recipe = LiftRecipe()
    vertices = list(g.vertices)
    edges = list(g.edges)
    eta = dict(g.eta)
    phi = dict(g.phi)
    value = g.value
    used = set(g.elements())

    def fresh(base):
        name, n = base, 1
        while name in used:
            n += 1
            name = f"{base}{n}"
        used.add(name)
        return name

    # (1) finite edge leaving a finite vertex
    for e in list(edges):
        if _finite(eta[e.source]) and _finite(eta[e.id]):
            edges.remove(e)
            recipe.steps.append(_keep([(e.id, eta.pop(e.id))]))
            phi.pop(e.id)

    # (2) finite vertices that begin no edge
    for v in list(vertices):
        if _finite(eta[v]) and not any(e.source == v for e in edges):
            if any(e.target == v for e in edges):
                raise InputError(f"{v}: finite vertex reached by an infinite product")
            vertices.remove(v)
            recipe.steps.append(_keep([(v, eta.pop(v))]))
            phi.pop(v)

    # (3) finite vertex with infinite edges
    for v in list(vertices):
        if not _finite(eta[v]):
            continue
        if any(e.target == v for e in edges):
            raise InputError(f"{v}: finite vertex reached by an infinite product")
        u = eta[v]
        uw = K.as_word(u)
        for e in [e for e in edges if e.source == v]:
            if e.id in g.factorizations:
                pi1, pi2 = g.factorizations[e.id]
                if (_finite(pi1) or _finite(pi2)
                        or not K.equivalent(K.mul(pi1, pi2), eta[e.id])):
                    raise InputError(
                        f"{e.id}: factorization is not a split of the label into infinite factors"
                    )
            else:
                pi1, pi2 = default_factorization(eta[e.id])
            v1, e1 = fresh(f"{e.id}~v"), fresh(f"{e.id}~e")
            edges[edges.index(e)] = Edge(e1, v1, e.target)
            vertices.append(v1)
            eta.pop(e.id)
            phi.pop(e.id)
            eta[v1] = K.mul(u, pi1)
            eta[e1] = pi2
            phi[v1] = value(eta[v1])
            phi[e1] = value(pi2)

            def step(out, eid=e.id, v1=v1, e1=e1, uw=uw):
                out[eid] = K.mul(K.strip_prefix(out.pop(v1), uw), out.pop(e1))

            recipe.steps.append(step)
        vertices.remove(v)
        recipe.steps.append(_keep([(v, eta.pop(v))]))
        phi.pop(v)

    # (4) finite edges of length > 1 become paths of letters
    for e in list(edges):
        w = K.as_word(eta[e.id])
        if w is None or len(w) == 1:
            continue
        prev = e.source
        path_v, path_e = [], []
        for i, a in enumerate(w, start=1):
            nxt = e.target if i == len(w) else fresh(f"{e.id}@{i}")
            ei = fresh(f"{e.id}#{i}")
            path_e.append(Edge(ei, prev, nxt))
            eta[ei] = K.Letter(a)
            phi[ei] = value(eta[ei])
            if nxt != e.target:
                path_v.append(nxt)
                eta[nxt] = K.mul(eta[e.source], K.word(w[:i]))
                phi[nxt] = value(eta[nxt])
            prev = nxt
        idx = edges.index(e)
        edges[idx:idx + 1] = path_e
        vertices.extend(path_v)
        label = eta.pop(e.id)
        phi.pop(e.id)

        def step(out, eid=e.id, label=label, drop=[x.id for x in path_e] + path_v):
            for x in drop:
                out.pop(x, None)
            out[eid] = label

        recipe.steps.append(step)

    out = GraphSystem(
        g.S, g.delta, tuple(vertices), tuple(edges), eta, phi,
        g.representatives, {},
    )
    return out, recipe


def ell_eta(g: GraphSystem) -> int:
    """Maximum length of a finite label."""
    return max((len(K.as_word(t)) for t in g.eta.values() if _finite(t)), default=0)


def relabel(g: GraphSystem, eta: Mapping[str, K.KTerm], phi: Mapping | None = None) -> GraphSystem:
    return GraphSystem(
        g.S, g.delta, g.vertices, g.edges, dict(eta),
        dict(phi) if phi is not None else dict(g.phi),
        g.representatives, g.factorizations,
    )

