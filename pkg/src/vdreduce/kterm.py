"""kappa-terms: letters, products and (omega-1)-powers.

Terms are immutable and kept flat: a ``Product`` never has a ``Product`` among
its factors, so its factors are letters and ``OmegaMinusOne`` nodes only.  Build
terms with :func:`mul`, :func:`word`, :func:`omm` and :func:`omega` rather than
the raw constructors.  The omega-power is derived syntax,
``x^w = x^(w-1) x``.

Text grammar (whitespace ignored)::

    term   := factor+ | "1"
    factor := letter | "[" name "]" | "(" term ")" suffix?
    suffix := "^w-1" | "^w"
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, Union

from .wordkit import LeftInfWord, canonicalize


class TermError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    name: str
    _h: int = field(default=0, init=False, repr=False, compare=False)

    def __hash__(self):
        if not self._h:
            object.__setattr__(self, "_h", hash(("L", self.name)) or 1)
        return self._h

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Product:
    factors: tuple
    _h: int = field(default=0, init=False, repr=False, compare=False)

    def __hash__(self):
        if not self._h:
            object.__setattr__(self, "_h", hash(("P", self.factors)) or 1)
        return self._h

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class OmegaMinusOne:
    arg: "KTerm"
    _h: int = field(default=0, init=False, repr=False, compare=False)

    def __hash__(self):
        if not self._h:
            object.__setattr__(self, "_h", hash(("O", self.arg)) or 1)
        return self._h

    def __str__(self):
        return to_text(self)


KTerm = Union[Letter, Product, OmegaMinusOne]

ONE = Product(())


def factors(t: KTerm) -> tuple:
    return t.factors if isinstance(t, Product) else (t,)


def mul(*terms: KTerm) -> KTerm:
    out: list = []
    for t in terms:
        out.extend(factors(t))
    if len(out) == 1:
        return out[0]
    return Product(tuple(out))


def word(w: Iterable[str]) -> KTerm:
    return mul(*(Letter(a) for a in w))


def omm(x: KTerm) -> KTerm:
    if x == ONE:
        raise TermError("(omega-1)-power of the empty term")
    return OmegaMinusOne(x)


def omega(x: KTerm) -> KTerm:
    return mul(omm(x), x)


def power(x: KTerm, n: int) -> KTerm:
    return mul(*([x] * n))


def is_one(t: KTerm) -> bool:
    return t == ONE


# -- classification ----------------------------------------------------------


@lru_cache(maxsize=None)
def is_finite(t: KTerm) -> bool:
    if isinstance(t, Letter):
        return True
    if isinstance(t, OmegaMinusOne):
        return False
    return all(isinstance(f, Letter) for f in t.factors)


def letters(t: KTerm) -> tuple[str, ...] | None:
    """Letter names of a finite term, ``None`` for infinite ones."""
    if not is_finite(t):
        return None
    return tuple(f.name for f in factors(t))


def as_word(t: KTerm) -> str | None:
    ls = letters(t)
    return None if ls is None else "".join(ls)


def length(t: KTerm) -> int | None:
    ls = letters(t)
    return None if ls is None else len(ls)


@lru_cache(maxsize=None)
def content(t: KTerm) -> frozenset[str]:
    if isinstance(t, Letter):
        return frozenset((t.name,))
    if isinstance(t, OmegaMinusOne):
        return content(t.arg)
    return frozenset().union(*(content(f) for f in t.factors))


def depth(t: KTerm) -> int:
    if isinstance(t, Letter):
        return 0
    if isinstance(t, OmegaMinusOne):
        return 1 + depth(t.arg)
    return max((depth(f) for f in t.factors), default=0)


def substitute(t: KTerm, image: Callable[[str], KTerm] | Mapping[str, KTerm]) -> KTerm:
    """Apply the homomorphism sending each letter ``a`` to ``image(a)``."""
    get = image if callable(image) else image.__getitem__
    memo: dict = {}

    def go(s):
        if s in memo:
            return memo[s]
        if isinstance(s, Letter):
            r = get(s.name)
        elif isinstance(s, OmegaMinusOne):
            r = omm(go(s.arg))
        else:
            r = mul(*(go(f) for f in s.factors))
        memo[s] = r
        return r

    return go(t)


# -- expansion oracle --------------------------------------------------------


def expanded_length(t: KTerm, n: int) -> int:
    if isinstance(t, Letter):
        return 1
    if isinstance(t, OmegaMinusOne):
        return (n - 1) * expanded_length(t.arg, n)
    return sum(expanded_length(f, n) for f in t.factors)


def expand_letters(t: KTerm, n: int) -> tuple[str, ...]:
    """Replace every ``x^(w-1)`` by ``x^(n-1)``."""
    if n < 1:
        raise TermError("expansion exponent must be positive")
    memo: dict = {}

    def go(s):
        if s in memo:
            return memo[s]
        if isinstance(s, Letter):
            r = (s.name,)
        elif isinstance(s, OmegaMinusOne):
            r = go(s.arg) * (n - 1)
        else:
            r = tuple(x for f in s.factors for x in go(f))
        memo[s] = r
        return r

    return go(t)


def expand(t: KTerm, n: int) -> str:
    return "".join(expand_letters(t, n))


# -- bounded prefixes and suffixes ------------------------------------------


@lru_cache(maxsize=None)
def i_k_term(t: KTerm, k: int) -> str:
    """Prefix of length ``min(k, |t|)`` of the pseudoword denoted by ``t``."""
    if k <= 0:
        return ""
    if isinstance(t, Letter):
        return t.name
    if isinstance(t, OmegaMinusOne):
        p = i_k_term(t.arg, k)
        if len(p) >= k:
            return p
        # the argument is a finite word shorter than k
        return (p * (k // len(p) + 1))[:k]
    out = ""
    for f in t.factors:
        if len(out) >= k:
            break
        out += i_k_term(f, k - len(out))
    return out


@lru_cache(maxsize=None)
def t_k_term(t: KTerm, k: int) -> str:
    """Suffix of length ``min(k, |t|)`` of the pseudoword denoted by ``t``."""
    if k <= 0:
        return ""
    if isinstance(t, Letter):
        return t.name
    if isinstance(t, OmegaMinusOne):
        s = t_k_term(t.arg, k)
        if len(s) >= k:
            return s
        return (s * (k // len(s) + 1))[-k:]
    out = ""
    for f in reversed(t.factors):
        if len(out) >= k:
            break
        out = t_k_term(f, k - len(out)) + out
    return out


# -- projection onto the definite pseudovariety ------------------------------


def p_D(t: KTerm, order: Sequence[str] | None = None) -> LeftInfWord:
    """Left-infinite word of an infinite term, in canonical form."""
    if is_finite(t):
        raise TermError(f"{to_text(t)} is finite; its projection is a finite word")
    if isinstance(t, OmegaMinusOne):
        x = t.arg
        if is_finite(x):
            return canonicalize(LeftInfWord(as_word(x)), order)
        # left-infinite words are right zeros, so every power of x projects like x
        return p_D(x, order)
    fs = t.factors
    last = max(i for i, f in enumerate(fs) if not is_finite(f))
    rest = "".join(f.name for f in fs[last + 1:])
    return canonicalize(p_D(fs[last], order).append(rest), order)


# -- the reduction x^w x^n x^w -> x^w x^n ------------------------------------


def normalize(t: KTerm) -> KTerm:
    """Flatten and rewrite every ``x^w x^n x^w`` to ``x^w x^n`` until none is left."""
    return _normalize(t)


@lru_cache(maxsize=None)
def _normalize(t: KTerm) -> KTerm:
    if isinstance(t, Letter):
        return t
    if isinstance(t, OmegaMinusOne):
        return omm(_normalize(t.arg))
    fs = list(factors(mul(*(_normalize(f) for f in t.factors))))
    return mul(*reduce_factors(fs))


def reduce_factors(fs: list) -> list:
    """Exhaustive leftmost rewriting on a flat factor list.

    In flat form ``x^w x^n x^w`` reads ``Omm(x) x^(n+1) Omm(x) x``; the redex
    loses its second ``Omm(x) x``.
    """
    fs = list(fs)
    i = 0
    while i < len(fs):
        f = fs[i]
        if not isinstance(f, OmegaMinusOne):
            i += 1
            continue
        fx = factors(f.arg)
        L = len(fx)
        p = i + 1
        reps = 0
        while tuple(fs[p:p + L]) == fx:
            p += L
            reps += 1
        if reps >= 1 and p < len(fs) and fs[p] == f and tuple(fs[p + 1:p + 1 + L]) == fx:
            del fs[p:p + 1 + L]
            continue
        i += 1
    return fs


def shift_right(t: KTerm) -> KTerm:
    """Push letters rightwards with ``a (y a)^(w-1) = (a y)^(w-1) a``, everywhere."""
    if isinstance(t, Letter):
        return t
    if isinstance(t, OmegaMinusOne):
        return omm(shift_right(t.arg))
    fs = [shift_right(f) for f in t.factors]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, f = fs[i], fs[i + 1]
            if isinstance(a, Letter) and isinstance(f, OmegaMinusOne):
                fx = factors(f.arg)
                if fx[-1] == a:
                    fs[i:i + 2] = [omm(mul(a, *fx[:-1])), a]
                    changed = True
    return mul(*fs)


def equivalent(s: KTerm, t: KTerm) -> bool:
    """Sound, incomplete test for equality of the denoted pseudowords.

    Both terms are compared after :func:`normalize`, and again after
    alternating :func:`shift_right` and :func:`normalize` up to a fixpoint.
    ``True`` is a proof; ``False`` only means no proof was found.
    """
    if normalize(s) == normalize(t):
        return True
    return _shift_nf(s) == _shift_nf(t)


def _shift_nf(t: KTerm) -> KTerm:
    prev = None
    t = normalize(t)
    while t != prev:
        prev = t
        t = normalize(shift_right(t))
    return t


def strip_prefix(t: KTerm, u: str) -> KTerm:
    """A term ``r`` with ``t = u r`` in every finite semigroup.

    Leading ``(omega-1)``-powers are unrolled with ``x^(w-1) = x (x^(w-1))^2``.
    """
    fs = list(factors(t))
    for a in u:
        while fs and isinstance(fs[0], OmegaMinusOne):
            f = fs.pop(0)
            fs[0:0] = list(factors(f.arg)) + [f, f]
        if not fs or fs[0].name != a:
            raise TermError(f"{to_text(t)} does not begin with {u!r}")
        fs.pop(0)
    return mul(*fs)


# -- text form ---------------------------------------------------------------


def _letter_text(name: str) -> str:
    if len(name) == 1 and name not in "()[]^1 \t\n":
        return name
    return f"[{name}]"


def to_text(t: KTerm) -> str:
    if t == ONE:
        return "1"
    fs = factors(t)
    out = []
    i = 0
    while i < len(fs):
        f = fs[i]
        if isinstance(f, Letter):
            out.append(_letter_text(f.name))
            i += 1
            continue
        inner = to_text(f.arg)
        fx = factors(f.arg)
        if tuple(fs[i + 1:i + 1 + len(fx)]) == fx:
            out.append(f"({inner})^w")
            i += 1 + len(fx)
        else:
            out.append(f"({inner})^w-1")
            i += 1
    return "".join(out)


def parse(text: str) -> KTerm:
    s = "".join(text.split())
    if s == "1":
        return ONE
    if not s:
        raise TermError("empty term text")
    pos = 0

    def term():
        nonlocal pos
        parts = []
        while pos < len(s) and s[pos] != ")":
            parts.append(fac())
        if not parts:
            raise TermError(f"expected a factor at column {pos + 1}")
        return mul(*parts)

    def fac():
        nonlocal pos
        c = s[pos]
        if c == "(":
            pos += 1
            inner = term()
            if pos >= len(s) or s[pos] != ")":
                raise TermError(f"unbalanced parenthesis at column {pos + 1}")
            pos += 1
            if s.startswith("^w-1", pos):
                pos += 4
                return omm(inner)
            if s.startswith("^w", pos):
                pos += 2
                return omega(inner)
            return inner
        if c == "[":
            end = s.find("]", pos)
            if end <= pos + 1:
                raise TermError(f"bad bracketed letter at column {pos + 1}")
            name = s[pos + 1:end]
            pos = end + 1
            return Letter(name)
        if c in ")^]1":
            raise TermError(f"unexpected {c!r} at column {pos + 1}")
        pos += 1
        return Letter(c)

    t = term()
    if pos != len(s):
        raise TermError(f"unexpected {s[pos]!r} at column {pos + 1}")
    return t
