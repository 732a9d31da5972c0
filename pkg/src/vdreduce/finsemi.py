"""Finite semigroups given by multiplication tables.

Elements are dense integer indices ``0 .. size-1`` and the table is row-major:
``table[x][y]`` is the product ``xy``.  A semigroup carrying the identity flag
uses index 0 as a two-sided identity; this is how ``S^1`` is modelled when
vertex values may be the empty product.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class SemigroupError(ValueError):
    """Structural problem with a table or a generator map."""


@dataclass(frozen=True)
class FinSemigroup:
    table: tuple[tuple[int, ...], ...]
    identity: bool = False

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise SemigroupError("empty table")
        for r, row in enumerate(table):
            if len(row) != n:
                raise SemigroupError(f"row {r} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise SemigroupError(f"entry {x} in row {r} out of range")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs: Iterable[int]) -> int:
        it = iter(xs)
        try:
            acc = next(it)
        except StopIteration:
            return self.one()
        for x in it:
            acc = self.table[acc][x]
        return acc

    def one(self) -> int:
        """Index of the identity; only available on semigroups flagged ``identity``."""
        if not self.identity:
            raise SemigroupError("empty product in a semigroup without identity")
        return 0

    def power(self, s: int, n: int) -> int:
        if n < 1:
            raise ValueError("power needs n >= 1")
        acc, base = None, s
        while n:
            if n & 1:
                acc = base if acc is None else self.table[acc][base]
            base = self.table[base][base]
            n >>= 1
        return acc

    def is_idempotent(self, s: int) -> bool:
        return self.table[s][s] == s

    def orbit(self, s: int) -> tuple[int, int]:
        """Return ``(index, period)`` of the monogenic subsemigroup of ``s``.

        ``s^(index + period) == s^index`` with both minimal.
        """
        seen: dict[int, int] = {}
        x, n = s, 1
        while x not in seen:
            seen[x] = n
            x = self.table[x][s]
            n += 1
        return seen[x], n - seen[x]

    def __repr__(self) -> str:
        flag = ", identity" if self.identity else ""
        return f"FinSemigroup(size={self.size}{flag})"


def verify_table(S: FinSemigroup) -> bool:
    """Associativity plus (when flagged) the identity law at index 0."""
    return associativity_witness(S) is None and (not S.identity or _is_identity(S, 0))


def associativity_witness(S: FinSemigroup) -> tuple[int, int, int] | None:
    t = S.table
    n = S.size
    for x in range(n):
        tx = t[x]
        for y in range(n):
            xy = tx[y]
            ty = t[y]
            for z in range(n):
                if t[xy][z] != tx[ty[z]]:
                    return (x, y, z)
    return None


def _is_identity(S: FinSemigroup, e: int) -> bool:
    return all(S.table[e][x] == x and S.table[x][e] == x for x in range(S.size))


def idempotents(S: FinSemigroup) -> frozenset[int]:
    return frozenset(s for s in range(S.size) if S.table[s][s] == s)


def exponent(S: FinSemigroup) -> int:
    """Least ``n >= 1`` with ``s^n`` idempotent for every ``s``."""
    need_index, period_lcm = 1, 1
    for s in range(S.size):
        index, period = S.orbit(s)
        need_index = max(need_index, index)
        period_lcm = math.lcm(period_lcm, period)
    # s^n is idempotent iff n >= index(s) and period(s) | n
    return period_lcm * math.ceil(need_index / period_lcm)


def omega_minus_one(S: FinSemigroup, s: int) -> int:
    """The element ``s^(omega-1)``: the inverse of ``s s^omega`` in the group of the orbit."""
    index, period = S.orbit(s)
    # least multiple m of the period with m - 1 >= index
    m = period * math.ceil((index + 1) / period)
    return S.power(s, m - 1)


def omega(S: FinSemigroup, s: int) -> int:
    index, period = S.orbit(s)
    return S.power(s, period * math.ceil(index / period))


@dataclass(frozen=True)
class GeneratorMap:
    """The restriction of the evaluation homomorphism to the alphabet.

    ``alphabet`` fixes the letter order used for Lyndon words.
    """

    alphabet: tuple[str, ...]
    image: Mapping[str, int] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "image", dict(self.image))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise SemigroupError("repeated letter in alphabet")
        missing = [a for a in self.alphabet if a not in self.image]
        if missing:
            raise SemigroupError(f"letters without image: {missing}")
        extra = [a for a in self.image if a not in self.alphabet]
        if extra:
            raise SemigroupError(f"images given for letters outside the alphabet: {extra}")

    def __getitem__(self, letter: str) -> int:
        try:
            return self.image[letter]
        except KeyError:
            raise SemigroupError(f"unknown letter {letter!r}") from None

    def check(self, S: FinSemigroup) -> None:
        for a in self.alphabet:
            if not 0 <= self.image[a] < S.size:
                raise SemigroupError(f"image of {a!r} is not an element of {S!r}")


def generated(S: FinSemigroup, gens: Iterable[int]) -> frozenset[int]:
    """Subsemigroup generated by ``gens`` (closure under right multiplication)."""
    gens = list(dict.fromkeys(gens))
    out = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = S.table[x][g]
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def eval_word(S: FinSemigroup, delta: GeneratorMap, w: Sequence[str]) -> int:
    if len(w) == 0:
        raise SemigroupError("cannot evaluate the empty word in a semigroup")
    return S.prod(delta[a] for a in w)


# -- constructors used by fixtures and tests ---------------------------------


def from_function(n: int, op, identity: bool = False) -> FinSemigroup:
    return FinSemigroup(tuple(tuple(op(x, y) for y in range(n)) for x in range(n)), identity)


def cyclic_group(n: int) -> FinSemigroup:
    return from_function(n, lambda x, y: (x + y) % n, identity=True)


def min_semilattice(n: int = 2) -> FinSemigroup:
    return from_function(n, min)


def direct_product(S: FinSemigroup, T: FinSemigroup) -> FinSemigroup:
    """Pairs ``(s, t)`` encoded as ``s * |T| + t``."""
    m = T.size

    def op(x, y):
        return S.table[x // m][y // m] * m + T.table[x % m][y % m]

    return from_function(S.size * m, op, identity=S.identity and T.identity)


def transformation_semigroup(
    gens: Sequence[Sequence[int]],
) -> tuple[FinSemigroup, list[int]]:
    """Semigroup generated by maps on ``{0..n-1}``, composed left to right.

    ``x * y`` acts as "first x, then y".  Returns the table and the indices of
    the generators.
    """
    gens = [tuple(g) for g in gens]
    elems: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}

    def add(f):
        if f not in index:
            index[f] = len(elems)
            elems.append(f)
        return index[f]

    gen_idx = [add(g) for g in gens]
    i = 0
    while i < len(elems):
        f = elems[i]
        for g in gens:
            add(tuple(g[f[p]] for p in range(len(f))))
        i += 1
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for x, f in enumerate(elems):
        for y, g in enumerate(elems):
            table[x][y] = index[tuple(g[f[p]] for p in range(len(f)))]
    return FinSemigroup(tuple(map(tuple, table))), gen_idx


def all_tables(n: int) -> Iterable[FinSemigroup]:
    """Every associative table on ``n`` elements (brute force, tiny n only)."""
    for flat in itertools.product(range(n), repeat=n * n):
        S = FinSemigroup(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
        if associativity_witness(S) is None:
            yield S


def eval_kterm(S: FinSemigroup, delta: Mapping[str, int] | GeneratorMap, t) -> int:
    """Value of a kappa-term: letters through ``delta``, products by the table,
    ``(omega-1)``-powers through :func:`omega_minus_one`."""
    from .kterm import Letter, OmegaMinusOne, ONE

    memo: dict = {}

    def go(s):
        r = memo.get(s)
        if r is not None:
            return r
        if isinstance(s, Letter):
            r = delta[s.name]
        elif isinstance(s, OmegaMinusOne):
            r = omega_minus_one(S, go(s.arg))
        elif s == ONE:
            r = S.one()
        else:
            fs = s.factors
            r = go(fs[0])
            for f in fs[1:]:
                r = S.table[r][go(f)]
        memo[s] = r
        return r

    return go(t)
