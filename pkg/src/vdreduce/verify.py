"""Deciders for pseudoidentities and checks on labelings of graph systems.

A pseudoidentity ``pi = rho`` of kappa-terms holds in ``V*D_k`` iff
``i_k pi = i_k rho``, ``t_k pi = t_k rho`` and ``V`` satisfies
``Phi_k pi = Phi_k rho`` over the alphabet of length-(k+1) words.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Sequence

from . import kterm as K
from .finsemi import FinSemigroup, eval_kterm
from .superpose import phi_k_term

# -- D_k and K_k -------------------------------------------------------------


def dk_satisfies(pi: K.KTerm, rho: K.KTerm, k: int) -> bool:
    return K.t_k_term(pi, k) == K.t_k_term(rho, k)


def kk_satisfies(pi: K.KTerm, rho: K.KTerm, k: int) -> bool:
    return K.i_k_term(pi, k) == K.i_k_term(rho, k)


# -- semilattices and groups -------------------------------------------------


def sl_satisfies(pi: K.KTerm, rho: K.KTerm) -> bool:
    return K.content(pi) == K.content(rho)


def free_group_word(t: K.KTerm) -> tuple[tuple[str, int], ...]:
    """Reduced free-group word of ``t`` with ``x^(w-1)`` read as ``x^-1``."""
    return _fg(t)


def _fg_reduce(parts: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    st: list = []
    for a, s in parts:
        if st and st[-1][0] == a and st[-1][1] == -s:
            st.pop()
        else:
            st.append((a, s))
    return tuple(st)


def _fg_inverse(w):
    return tuple((a, -s) for a, s in reversed(w))


_FG_MEMO: dict = {}


def _fg(t):
    r = _FG_MEMO.get(t)
    if r is not None:
        return r
    if isinstance(t, K.Letter):
        r = ((t.name, 1),)
    elif isinstance(t, K.OmegaMinusOne):
        r = _fg_inverse(_fg(t.arg))
    else:
        r = _fg_reduce(x for f in t.factors for x in _fg(f))
    _FG_MEMO[t] = r
    return r


def g_satisfies(pi: K.KTerm, rho: K.KTerm) -> bool:
    return free_group_word(pi) == free_group_word(rho)


# -- finite samples ----------------------------------------------------------


@dataclass(frozen=True)
class VarietyBackend:
    """``sl`` and ``g`` decide; ``sample`` can only refute."""

    tag: str
    sample: tuple[FinSemigroup, ...] = ()
    max_maps: int = 4096
    seed: int = 0

    def __post_init__(self):
        if self.tag not in ("sl", "g", "sample"):
            raise ValueError(f"unknown variety {self.tag!r}")
        if self.tag == "sample" and not self.sample:
            raise ValueError("sample backend needs at least one semigroup")

    @property
    def exact(self) -> bool:
        return self.tag != "sample"

    def satisfies(self, pi: K.KTerm, rho: K.KTerm) -> bool | None:
        """``True``/``False`` for exact backends; ``False`` or ``None`` when sampling."""
        if self.tag == "sl":
            return sl_satisfies(pi, rho)
        if self.tag == "g":
            return g_satisfies(pi, rho)
        return False if sample_refute(pi, rho, self) is not None else None


SL = VarietyBackend("sl")
G = VarietyBackend("g")


def _value(S, delta, t):
    if t == K.ONE:
        return S.one() if S.identity else None
    return eval_kterm(S, delta, t)


def sample_refute(pi: K.KTerm, rho: K.KTerm, backend: VarietyBackend):
    """A ``(semigroup index, letter map)`` separating the terms, or ``None``.

    All maps are tried when there are at most ``max_maps`` of them, otherwise
    a seeded random selection of that size.
    """
    letters = sorted(K.content(pi) | K.content(rho))
    rng = random.Random(backend.seed)
    for idx, S in enumerate(backend.sample):
        n = S.size
        if n ** len(letters) <= backend.max_maps:
            maps = itertools.product(range(n), repeat=len(letters))
        else:
            maps = (tuple(rng.randrange(n) for _ in letters) for _ in range(backend.max_maps))
        for img in maps:
            delta = dict(zip(letters, img))
            if _value(S, delta, pi) != _value(S, delta, rho):
                return idx, delta
    return None


# -- V*D_k -------------------------------------------------------------------


def vdk_satisfies(V: VarietyBackend, pi: K.KTerm, rho: K.KTerm, k: int) -> bool | None:
    if not (kk_satisfies(pi, rho, k) and dk_satisfies(pi, rho, k)):
        return False
    return V.satisfies(phi_k_term(pi, k), phi_k_term(rho, k))


def vdk_witness(V: VarietyBackend, pi: K.KTerm, rho: K.KTerm, k: int) -> str:
    a, b = K.i_k_term(pi, k), K.i_k_term(rho, k)
    if a != b:
        return f"prefixes {a!r} != {b!r}"
    a, b = K.t_k_term(pi, k), K.t_k_term(rho, k)
    if a != b:
        return f"suffixes {a!r} != {b!r}"
    return f"{V.tag} separates the superposition images"


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    check: str
    element: str
    verdict: str  # pass | fail | skip | unknown
    k: int | None = None
    witness: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Report:
    records: list = field(default_factory=list)

    def add(self, check, element, ok, k=None, witness="") -> None:
        verdict = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        if ok is None:
            verdict = "unknown"
        self.records.append(CheckRecord(check, element, verdict, k, "" if verdict == "pass" else witness))

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    @property
    def ok(self) -> bool:
        return all(r.verdict != "fail" for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.verdict == "fail"]

    def by_check(self, check: str) -> list[CheckRecord]:
        return [r for r in self.records if r.check == check]

    def as_list(self) -> list[dict]:
        return [r.as_dict() for r in self.records]


# -- solutions and the conditions C1-C3 --------------------------------------


def check_phi(g, labels: Mapping[str, K.KTerm]) -> Report:
    rep = Report()
    for x in g.elements():
        got = _value(g.S, g.delta, labels[x])
        rep.add("phi", x, got == g.phi[x], witness=f"delta = {got}, phi = {g.phi[x]}")
    return rep


def check_solution(
    g, labels: Mapping[str, K.KTerm], V: VarietyBackend, kmax: int, kmin: int = 1
) -> Report:
    """``delta eta = phi`` and every edge equation over ``V*D_k'`` for ``k' = kmin..kmax``."""
    rep = check_phi(g, labels)
    for e in g.edges:
        lhs = K.mul(labels[e.source], labels[e.id])
        rhs = labels[e.target]
        for kp in range(kmin, kmax + 1):
            ok = vdk_satisfies(V, lhs, rhs, kp)
            rep.add("VD", e.id, ok, kp, "" if ok else vdk_witness(V, lhs, rhs, kp))
    return rep


def check_C1(g, labels: Mapping[str, K.KTerm]) -> Report:
    rep = Report()
    for x in g.elements():
        t = g.eta[x]
        if K.is_finite(t):
            got = labels[x]
            rep.add("C1", x, got == t, witness=f"{K.to_text(got)} != {K.to_text(t)}")
    return rep


def check_C2(g, labels: Mapping[str, K.KTerm], exempt: Sequence[str] = ()) -> Report:
    """``p_D`` is preserved on infinite vertices; ``exempt`` vertices are skipped."""
    rep = Report()
    order = g.alphabet
    for v in g.vertices:
        t = g.eta[v]
        if K.is_finite(t):
            continue
        if v in exempt:
            rep.add("C2", v, "skip", witness="class with a non-periodic representative")
            continue
        a = K.p_D(t, order)
        got = labels[v]
        b = K.p_D(got, order) if not K.is_finite(got) else None
        rep.add("C2", v, a == b, witness=f"{b} != {a}")
    return rep


def check_C3(g, labels: Mapping[str, K.KTerm], L: int) -> Report:
    """Prefixes of length at most ``L`` are kept, with residues of equal value."""
    rep = Report()
    for v in g.vertices:
        t, t2 = g.eta[v], labels[v]
        if K.is_finite(t):
            rep.add("C3", v, t2 == t, witness="finite label changed")
            continue
        ok, why = True, ""
        for n in range(1, L + 1):
            u = K.i_k_term(t, n)
            if K.i_k_term(t2, n) != u:
                ok, why = False, f"prefix of length {n} differs"
                break
            r1, r2 = K.strip_prefix(t, u), K.strip_prefix(t2, u)
            a, b = _value(g.S, g.delta, r1), _value(g.S, g.delta, r2)
            if a != b:
                ok, why = False, f"residue after {u!r} has value {b}, expected {a}"
                break
        rep.add("C3", v, ok, witness=why)
    return rep
