"""k-superposition: factor sequences, splitting factorizations and theta_k.

Positions are 1-based and inclusive, as in the usual ``a_1 ... a_k`` notation;
``(i, j)`` names the factor ``a_i ... a_j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from . import kterm as K
from .errors import InputError, InternalError
from .finsemi import FinSemigroup, GeneratorMap
from .wordkit import Border


class SuperpositionError(InternalError):
    """An invariant of the construction failed (a bug or a bad context)."""


@dataclass(frozen=True, eq=False)
class SplitContext:
    borders: Mapping[str, Border]
    M: int
    Q: int
    E: int
    L: int
    n_S: int
    S: FinSemigroup
    delta: GeneratorMap
    _memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.Q != self.L + self.E:
            raise InputError(f"Q={self.Q} differs from L+E={self.L + self.E}")
        for w in self.borders:
            if len(w) != self.M:
                raise InputError(f"border {w!r} does not have length M={self.M}")

    @property
    def k(self) -> int:
        return self.M + self.Q


@dataclass(frozen=True)
class SplitFactorization:
    left: str
    right: str
    s: int
    periodic: bool
    root: str | None = None


@dataclass(frozen=True)
class EssentialFactor:
    i: int
    j: int
    word: str


def bounds(w: str, ctx: SplitContext) -> list[tuple[int, bool]]:
    M = ctx.M
    if len(w) < M:
        raise InputError(f"bounds need a word of length >= M={M}")
    out = []
    for m in range(M, len(w) + 1):
        b = ctx.borders.get(w[m - M:m])
        if b is not None:
            out.append((m, b.periodic))
    return out


def split(w: str, ctx: SplitContext) -> SplitFactorization:
    if len(w) != ctx.k:
        raise InputError(f"split needs a word of length k={ctx.k}, got {len(w)}")
    bs = bounds(w, ctx)
    if not bs:
        return SplitFactorization(w, "", len(w), False)
    s, periodic = bs[-1]
    root = ctx.borders[w[s - ctx.M:s]].root
    return SplitFactorization(w[:s], w[s:], s, periodic, root)


def essential(w: str, ctx: SplitContext) -> EssentialFactor:
    memo = ctx._memo.setdefault("essential", {})
    if w in memo:
        return memo[w]
    sp = split(w, ctx)
    s = sp.s
    tab = ctx.S.table
    if sp.periodic:
        e = sp.root * ctx.n_S
        i = s - len(e) + 1
        if i < 1 or w[i - 1:s] != e:
            raise SuperpositionError(f"left-hand of {w!r} does not end with {e!r}")
        v = ctx.S.prod(ctx.delta[a] for a in e)
        if tab[v][v] != v:
            raise SuperpositionError(f"{e!r} is not idempotent although it is a root power")
        out = EssentialFactor(i, s, e)
    else:
        out = None
        lo = max(s - ctx.E + 1, 1)
        for j in range(s, lo - 1, -1):
            v = None
            for i in range(j, lo - 1, -1):
                x = ctx.delta[w[i - 1]]
                v = x if v is None else tab[x][v]
                if tab[v][v] == v:
                    # scanning leftwards, the first hit has the largest i
                    best = i
                    break
            else:
                continue
            out = EssentialFactor(best, j, w[best - 1:j])
            break
        if out is None:
            raise SuperpositionError(
                f"no idempotent factor in positions {lo}..{s} of {w!r}; E={ctx.E} is too small"
            )
    memo[w] = out
    return out


def hat(w: str, ctx: SplitContext) -> K.KTerm:
    e = essential(w, ctx)
    return K.mul(K.word(w[:e.j]), K.omega(K.word(e.word)), K.word(w[e.j:]))


def lambda_k(w: str, ctx: SplitContext) -> K.KTerm:
    e = essential(w, ctx)
    return K.mul(K.word(w[:e.j]), K.omega(K.word(e.word)))


def rho_k(w: str, ctx: SplitContext) -> K.KTerm:
    e = essential(w, ctx)
    return K.mul(K.omega(K.word(e.word)), K.word(w[e.j:]))


# -- the superposition homomorphism ------------------------------------------


def phi_k(w: str, k: int) -> tuple[str, ...]:
    """Factors of length ``k+1`` in order of occurrence."""
    return tuple(w[i:i + k + 1] for i in range(len(w) - k))


def phi_k_term(t: K.KTerm, k: int) -> K.KTerm:
    """Image of a kappa-term over the alphabet of length-(k+1) words.

    Symbols are letters whose name is the factor itself.
    """
    return _phi_ctx("", t, k)


@lru_cache(maxsize=None)
def _phi_ctx(w: str, t: K.KTerm, k: int) -> K.KTerm:
    # Phi_k(w t) for a finite left context w with |w| <= k
    if K.is_finite(t):
        return K.mul(*(K.Letter(f) for f in phi_k(w + K.as_word(t), k)))
    if isinstance(t, K.Product):
        parts = []
        c = w
        for f in t.factors:
            parts.append(_phi_ctx(c, f, k))
            c = (c + K.t_k_term(f, k))[-k:] if k else ""
        return K.mul(*parts)
    x = t.arg
    n = K.length(x)
    # after J copies of x the left context is stable
    J = 1 if n is None else max(1, math.ceil(k / n))
    xJ = K.power(x, J)
    c = K.t_k_term(xJ, k)
    y = _phi_ctx(c, x, k)
    # Phi_k(w x^(N-1)) = Phi_k(w x^J) y^(N-1-J), and y^(w-1-J) = (y^(w-1))^(J+1)
    return K.mul(_phi_ctx(w, xJ, k), *([K.omm(y)] * (J + 1)))


def window_essentials(sym: str, ctx: SplitContext) -> tuple[EssentialFactor, EssentialFactor]:
    """Essential factors of the two length-k windows of ``sym``, in ``sym`` positions."""
    e1 = essential(sym[:-1], ctx)
    e2 = essential(sym[1:], ctx)
    return e1, EssentialFactor(e2.i + 1, e2.j + 1, e2.word)


def psi_k(sym: str, ctx: SplitContext) -> K.KTerm:
    if len(sym) != ctx.k + 1:
        raise InputError(f"psi_k needs a word of length k+1={ctx.k + 1}")
    memo = ctx._memo.setdefault("psi", {})
    if sym in memo:
        return memo[sym]
    e1, e2 = window_essentials(sym, ctx)
    if e2.j < e1.j:
        raise SuperpositionError(
            f"essential factors of {sym!r} are out of order: j1={e1.j} > j2={e2.j}"
        )
    out = K.mul(K.omega(K.word(e1.word)), K.word(sym[e1.j:e2.j]), K.omega(K.word(e2.word)))
    memo[sym] = out
    return out


def theta_k(t: K.KTerm, ctx: SplitContext) -> K.KTerm:
    """``psi_k`` applied to ``Phi_k t``, in reduced form."""
    phi = phi_k_term(t, ctx.k)
    return K.normalize(K.substitute(phi, lambda sym: psi_k(sym, ctx)))


def lemma1(w: str, ctx: SplitContext) -> tuple[bool, bool]:
    """For ``|w| = k+1``: (``a_1 l_{w2}`` extends ``l_{w1}``, ``j1 <= j2``)."""
    w1, w2 = w[:-1], w[1:]
    s1, s2 = split(w1, ctx).s, split(w2, ctx).s
    e1, e2 = window_essentials(w, ctx)
    return s1 <= s2 + 1, e1.j <= e2.j


# -- reduced form -------------------------------------------------------------


@dataclass(frozen=True)
class ReducedTheta:
    word: str
    essentials: tuple[EssentialFactor, ...]  # e_p for p = 1..r, in word positions
    anchors: tuple[int, ...]  # n_1 = 1 < n_2 < ... < n_q
    fbars: tuple[str, ...]  # fbar_1 .. fbar_q

    @property
    def r(self) -> int:
        return len(self.essentials)

    @property
    def q(self) -> int:
        return len(self.anchors)

    def e(self, p: int) -> EssentialFactor:
        return self.essentials[p - 1]

    def to_term(self) -> K.KTerm:
        parts = []
        for n, fb in zip(self.anchors, self.fbars):
            parts += [K.omega(K.word(self.e(n).word)), K.word(fb)]
        return K.mul(*parts)

    def dump(self) -> dict:
        return {
            "word": self.word,
            "essentials": [[e.i, e.j, e.word] for e in self.essentials],
            "anchors": list(self.anchors),
            "fbars": list(self.fbars),
        }


def _is_power_of(s: str, e: str) -> bool:
    return len(s) % len(e) == 0 and e * (len(s) // len(e)) == s


def reduced_form(w: str, ctx: SplitContext) -> ReducedTheta:
    k = ctx.k
    if len(w) <= k:
        raise InputError(f"reduced form needs a word longer than k={k}")
    r = len(w) - k + 1
    es = []
    for p in range(1, r + 1):
        e = essential(w[p - 1:p - 1 + k], ctx)
        es.append(EssentialFactor(e.i + p - 1, e.j + p - 1, e.word))
    for p in range(1, r):
        if es[p].j < es[p - 1].j:
            raise SuperpositionError(
                f"essential factors out of order at windows {p},{p + 1} of {w!r}"
            )
    anchors, fbars = [1], []
    anchor = es[0].word
    acc = ""
    for p in range(2, r + 1):
        acc += w[es[p - 2].j:es[p - 1].j]
        if es[p - 1].word == anchor and _is_power_of(acc, anchor):
            continue
        fbars.append(acc)
        anchors.append(p)
        anchor = es[p - 1].word
        acc = ""
    fbars.append(acc)
    return ReducedTheta(w, tuple(es), tuple(anchors), tuple(fbars))
