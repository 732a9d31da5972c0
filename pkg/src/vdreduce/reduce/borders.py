"""Confinality classes, borders and the constants of the construction."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .. import kterm as K
from ..errors import InputError
from ..finsemi import exponent
from ..superpose import SplitContext
from ..wordkit import (
    Border,
    LeftInfWord,
    canonicalize,
    chop,
    common_suffix_length,
    gap,
    suffix_of_leftinf,
)
from .graph import GraphSystem, ell_eta


@dataclass(frozen=True)
class BorderClass:
    """A confinality class of vertex projections with its representative."""

    y: LeftInfWord
    z: dict  # vertex -> word with p_D(eta v) = y z
    root: str  # Lyndon root shared by the class

    @property
    def periodic(self) -> bool:
        return self.y.periodic


@dataclass(frozen=True)
class ReductionContext:
    n_S: int
    ell_eta: int
    p_eta: int
    L: int
    E: int
    Q: int
    q_Q: int
    M: int
    k: int
    classes: tuple[BorderClass, ...]
    borders: dict = field(hash=False)  # word -> Border

    @property
    def roots(self) -> tuple[str, ...]:
        return tuple(c.root for c in self.classes if c.periodic)

    def class_of(self, v: str) -> BorderClass:
        for c in self.classes:
            if v in c.z:
                return c
        raise KeyError(v)

    def z(self, v: str) -> str:
        return self.class_of(v).z[v]

    def border_of(self, v: str) -> str:
        return suffix_of_leftinf(self.class_of(v).y, self.M)

    def summary(self) -> dict:
        return {
            "n_S": self.n_S, "p_eta": self.p_eta, "ell_eta": self.ell_eta, "L": self.L,
            "E": self.E, "Q": self.Q, "q_Q": self.q_Q, "M": self.M, "k": self.k,
            "borders": sorted(self.borders),
        }


def _z_for(y: LeftInfWord, d: LeftInfWord) -> str | None:
    # both share the Lyndon root u; d is canonical, y = inf(u) p.  Find the
    # least j with p a prefix of u^j d.tail.
    u, p = y.root, y.tail
    for j in range(len(p) // len(u) + 2):
        w = u * j + d.tail
        if w.startswith(p):
            return w[len(p):]
    return None


def compute_borders(g: GraphSystem) -> list[BorderClass]:
    """Group vertex projections into confinality classes, in vertex order."""
    order = g.alphabet
    proj = {}
    for v in g.vertices:
        t = g.eta[v]
        if K.is_finite(t):
            raise InputError(f"{v}: vertex label is finite; simplify first")
        proj[v] = K.p_D(t, order)
    by_root: dict[str, dict] = {}
    for v in g.vertices:
        by_root.setdefault(proj[v].root, {})[v] = proj[v]
    for r in g.representatives:
        if r not in by_root:
            raise InputError(f"representative given for root {r!r}, which labels no class")
    classes = []
    for root, members in by_root.items():
        y = LeftInfWord(root)
        rep = g.representatives.get(root)
        if rep is not None:
            rep = canonicalize(rep, order)
            if rep.root != root:
                raise InputError(f"representative {rep} is not confinal with inf({root})")
            # inf(u) t has period |u| to the end iff t is a prefix of u u ...
            if (root * (len(rep.tail) // len(root) + 1)).startswith(rep.tail):
                raise InputError(
                    f"representative {rep} is purely periodic; periodic classes use inf({root})"
                )
            y = rep
        z = {}
        for v, d in members.items():
            zv = _z_for(y, d)
            if zv is None:
                raise InputError(f"{v}: projection {d} is not of the form {y}z")
            z[v] = zv
        classes.append(BorderClass(y, z, root))
    return classes


def borders_at(classes, m: int) -> dict[str, Border]:
    out = {}
    for c in classes:
        w = suffix_of_leftinf(c.y, m)
        out[w] = Border(w, c.root if c.periodic else None)
    return out


def find_qQ(ys: list[LeftInfWord], Q: int) -> int:
    """Least m0 such that both gap conditions hold for every m >= m0.

    For a pair of representatives and an overlap shift d, the overlap
    condition at length m reads ``t_(m-d) y1 = t_(m-d) chop(y2, d)``, which
    holds exactly for m up to the common suffix length plus d.  Distinct
    classes must also give distinct borders.
    """
    m0 = 1
    for a, y1 in enumerate(ys):
        for b, y2 in enumerate(ys):
            if a == b and y1.periodic:
                continue
            if a != b:
                c = common_suffix_length(y1, y2)
                if c is None:
                    raise InputError(f"representatives {y1} and {y2} coincide")
                m0 = max(m0, c + 1)
            for d in range(1, Q + 1):
                c = common_suffix_length(y1, chop(y2, d))
                if c is None:
                    raise InputError(f"representatives {y1} and {y2} are confinal")
                m0 = max(m0, c + d + 1)
    return m0


def gap_conditions_hold(classes, m: int, Q: int) -> bool:
    """Brute-force check of both gap conditions at one length ``m``."""
    ws = [(suffix_of_leftinf(c.y, m), c.periodic) for c in classes]
    for a, (y1, p1) in enumerate(ws):
        for b, (y2, _) in enumerate(ws):
            if a < b and (y1 == y2 or gap(y1, y2) <= Q):
                return False
        if not p1 and gap(y1, y1) <= Q:
            return False
    return True


def idempotent_free_length(S, delta, cap: int) -> int:
    """Length of the longest word whose factors all have non-idempotent values.

    Returns ``cap + 1`` as soon as a word of that length exists.
    """
    tab = S.table
    idem = [tab[s][s] == s for s in range(S.size)]
    letters = sorted({delta[a] for a in delta.alphabet})
    level = {frozenset()}
    n = 0
    while level:
        nxt = set()
        for st in level:
            for x in letters:
                vals = {tab[s][x] for s in st}
                vals.add(x)
                if not any(idem[v] for v in vals):
                    nxt.add(frozenset(vals))
        if not nxt:
            return n
        n += 1
        if n > cap:
            return n
        level = nxt
    return n


def find_E(S, delta, n_S: int, p_eta: int, cap: int | None = None) -> int:
    if cap is None:
        cap = S.size * n_S + n_S * p_eta
    lo = n_S * p_eta
    free = idempotent_free_length(S, delta, cap)
    E = max(lo, free + 1)
    if E > cap:
        raise InputError(f"E search exceeded the cap {cap}; raise it with --ecap")
    return E


def compute_constants(
    g: GraphSystem,
    classes: list[BorderClass] | None = None,
    original: GraphSystem | None = None,
    ecap: int | None = None,
) -> ReductionContext:
    """Constants for a simplified system.

    ``original`` is the system before simplification; the maximal finite
    label length is taken there so that lifted prefixes stay within reach.
    """
    if classes is None:
        classes = compute_borders(g)
    n_S = exponent(g.S)
    roots = [c.root for c in classes if c.periodic]
    p_eta = math.lcm(*(len(u) for u in roots)) if roots else 1
    ell = max(ell_eta(g), ell_eta(original) if original is not None else 0)
    L = max([ell] + [len(z) for c in classes for z in c.z.values()])
    E = find_E(g.S, g.delta, n_S, p_eta, ecap)
    Q = L + E
    q_Q = find_qQ([c.y for c in classes], Q)
    M = p_eta * max(math.ceil(q_Q / p_eta), Q // p_eta + 1)
    k = M + Q
    return ReductionContext(
        n_S, ell, p_eta, L, E, Q, q_Q, M, k, tuple(classes), borders_at(classes, M)
    )


def split_context(g: GraphSystem, ctx: ReductionContext) -> SplitContext:
    return SplitContext(ctx.borders, ctx.M, ctx.Q, ctx.E, ctx.L, ctx.n_S, g.S, g.delta)
