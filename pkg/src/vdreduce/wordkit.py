"""Finite and left-infinite words.

Words over the base alphabet are plain ``str`` values with one character per
letter; the empty string is the empty word.  Left-infinite words are always
ultimately periodic here: ``LeftInfWord(root, tail)`` denotes
``...root root root tail``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence


class WordError(ValueError):
    pass


def t_k(w: str, k: int) -> str:
    """Longest suffix of length at most ``k``."""
    return w[max(len(w) - k, 0):]


def i_k(w: str, k: int) -> str:
    """Longest prefix of length at most ``k``."""
    return w[:k]


def primitive_root(w: str) -> str:
    n = len(w)
    if n == 0:
        raise WordError("the empty word has no primitive root")
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    raise AssertionError("unreachable")


def is_primitive(w: str) -> bool:
    return len(w) > 0 and primitive_root(w) == w


def _key(order: Sequence[str] | None):
    if order is None:
        return lambda w: w
    rank = {a: i for i, a in enumerate(order)}
    return lambda w: tuple(rank[c] for c in w)


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def is_lyndon(w: str, order: Sequence[str] | None = None) -> bool:
    """Strictly smaller than every proper rotation (so primitive as well)."""
    if not w:
        return False
    key = _key(order)
    kw = key(w)
    return all(kw < key(r) for r in rotations(w)[1:])


def lyndon_conjugate(w: str, order: Sequence[str] | None = None) -> str:
    if not is_primitive(w):
        raise WordError(f"{w!r} is not primitive")
    return min(rotations(w), key=_key(order))


@dataclass(frozen=True)
class LeftInfWord:
    root: str
    tail: str = ""

    def __post_init__(self):
        if not self.root:
            raise WordError("left-infinite word needs a non-empty root")

    def __str__(self) -> str:
        return f"inf({self.root}){self.tail}"

    @property
    def periodic(self) -> bool:
        return self.tail == ""

    def append(self, w: str) -> "LeftInfWord":
        return LeftInfWord(self.root, self.tail + w)

    def suffix(self, m: int) -> str:
        return suffix_of_leftinf(self, m)


def parse_leftinf(text: str) -> LeftInfWord:
    text = text.strip()
    if not text.startswith("inf(") or ")" not in text:
        raise WordError(f"expected inf(root)tail, got {text!r}")
    close = text.index(")")
    return LeftInfWord(text[4:close], text[close + 1:])


def canonicalize(y: LeftInfWord, order: Sequence[str] | None = None) -> LeftInfWord:
    """Primitive Lyndon root and a tail that does not begin with the root."""
    rho = primitive_root(y.root)
    u = lyndon_conjugate(rho, order)
    # rho = p q and u = q p, so inf(rho) = inf(u) q
    shift = next(i for i in range(len(rho)) if rho[i:] + rho[:i] == u)
    tail = rho[shift:] + y.tail
    while tail.startswith(u):
        tail = tail[len(u):]
    return LeftInfWord(u, tail)


def suffix_of_leftinf(y: LeftInfWord, m: int) -> str:
    if m <= len(y.tail):
        return t_k(y.tail, m)
    need = m - len(y.tail)
    reps = -(-need // len(y.root))
    return t_k(y.root * reps, need) + y.tail


def chop(y: LeftInfWord, d: int) -> LeftInfWord:
    """Remove the last ``d`` letters."""
    tail = y.tail
    while len(tail) < d:
        tail = y.root + tail
    return LeftInfWord(y.root, tail[:len(tail) - d])


def same_leftinf(y1: LeftInfWord, y2: LeftInfWord) -> bool:
    return common_suffix_length(y1, y2) is None


def common_suffix_length(y1: LeftInfWord, y2: LeftInfWord) -> int | None:
    """Length of the longest common suffix, or ``None`` when the words are equal."""
    # past both tails the two words are periodic with period lcm(|u1|, |u2|)
    bound = max(len(y1.tail), len(y2.tail)) + lcm(len(y1.root), len(y2.root))
    s1, s2 = suffix_of_leftinf(y1, bound), suffix_of_leftinf(y2, bound)
    for n in range(1, bound + 1):
        if s1[-n] != s2[-n]:
            return n - 1
    return None


def confinal(
    y1: LeftInfWord, y2: LeftInfWord, order: Sequence[str] | None = None
) -> tuple[str, str] | None:
    """Tails ``(z1, z2)`` with ``y1 = y z1`` and ``y2 = y z2`` for a common prefix ``y``."""
    c1, c2 = canonicalize(y1, order), canonicalize(y2, order)
    if c1.root != c2.root:
        return None
    return c1.tail, c2.tail


def gap(y1: str, y2: str) -> int:
    """Least ``|u|`` with ``y1 u = v y2`` or ``y2 u = v y1`` (``u, v`` non-empty)."""
    m = len(y1)
    if len(y2) != m:
        raise WordError("gap needs words of equal length")
    if m == 0:
        raise WordError("gap needs non-empty words")
    for d in range(1, m):
        # overlap of length m - d
        if y1[d:] == y2[:m - d] or y2[d:] == y1[:m - d]:
            return d
    return m


@dataclass(frozen=True)
class Border:
    word: str
    root: str | None = None

    @property
    def periodic(self) -> bool:
        return self.root is not None

    def __post_init__(self):
        if self.root is not None:
            r = self.root
            if len(self.word) % len(r) or r * (len(self.word) // len(r)) != self.word:
                raise WordError(f"border {self.word!r} is not a power of {r!r}")
