"""Shared fixtures: small semigroups, random terms and the expansion oracle."""

from __future__ import annotations

import itertools
import math
import random
from pathlib import Path

from vdreduce import finsemi as F
from vdreduce import kterm as K
from vdreduce.io import load_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_graph(name: str):
    return load_graph(FIXTURES / f"{name}.graph.json")


def left_zero(n: int) -> F.FinSemigroup:
    return F.from_function(n, lambda x, y: x)


def right_zero(n: int) -> F.FinSemigroup:
    return F.from_function(n, lambda x, y: y)


def nilpotent3() -> F.FinSemigroup:
    # {0 = zero, 1 = a, 2 = a^2}, a^3 = 0
    return F.from_function(3, lambda x, y: min(x + y, 3) % 3 if x and y else 0)


def monoid_b2() -> F.FinSemigroup:
    # aperiodic monoid {1, x, x^2=x^3} plus a zero: 4 elements
    def op(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x == 3 or y == 3:
            return 3
        return min(x + y, 2)
    return F.from_function(4, op, identity=True)


def small_semigroups() -> list[F.FinSemigroup]:
    """The fixture set of semigroups with at most four elements."""
    out = [
        F.min_semilattice(2),
        F.min_semilattice(3),
        F.cyclic_group(2),
        F.cyclic_group(3),
        F.cyclic_group(4),
        left_zero(2),
        right_zero(3),
        nilpotent3(),
        monoid_b2(),
        F.direct_product(F.cyclic_group(2), F.min_semilattice(2)),
    ]
    for S in out:
        assert F.associativity_witness(S) is None
    return out


def generator_maps(S: F.FinSemigroup, alphabet=("a", "b")):
    for imgs in itertools.product(range(S.size), repeat=len(alphabet)):
        yield F.GeneratorMap(alphabet, dict(zip(alphabet, imgs)))


def oracle_ns(S: F.FinSemigroup, count: int = 3, extra: int = 0) -> list[int]:
    """Multiples of the exponent strictly above ``|S| + extra``."""
    n = F.exponent(S)
    base = n * ((S.size + extra) // n) + n
    return [base + i * n for i in range(count)]


def oracle_value(S, delta, t, N) -> int:
    w = K.expand(t, N)
    return F.eval_word(S, delta, w)


# -- random kappa-terms --------------------------------------------------------


def random_term(rng: random.Random, depth: int, alphabet=("a", "b"), width: int = 3) -> K.KTerm:
    if depth == 0:
        return K.word(rng.choice(alphabet) for _ in range(rng.randint(1, width)))
    parts = []
    for _ in range(rng.randint(1, width)):
        r = rng.random()
        if r < 0.45:
            parts.append(K.omm(random_term(rng, depth - 1, alphabet, width)))
        elif r < 0.7:
            parts.append(K.omega(random_term(rng, depth - 1, alphabet, width)))
        else:
            parts.append(random_term(rng, 0, alphabet, width))
    return K.mul(*parts)


def random_infinite_term(rng, depth, alphabet=("a", "b"), width=3) -> K.KTerm:
    while True:
        t = random_term(rng, max(depth, 1), alphabet, width)
        if not K.is_finite(t):
            return t


def terms_up_to_depth2(alphabet=("a", "b")) -> list[K.KTerm]:
    """All terms built from words of length at most 2 by at most two nested
    (omega-1)-powers, with products of at most two factors at each level."""
    words = [K.word(w) for n in (1, 2) for w in itertools.product(alphabet, repeat=n)]
    d1_atoms = [K.omm(w) for w in words]
    d1 = words + d1_atoms + [K.mul(x, y) for x in words + d1_atoms for y in d1_atoms]
    d1 += [K.mul(x, y) for x in d1_atoms for y in words]
    d2_atoms = [K.omm(t) for t in d1]
    out = list(dict.fromkeys(d1 + d2_atoms))
    out += [K.mul(x, y) for x in words for y in d2_atoms]
    return list(dict.fromkeys(out))


def random_semigroup(rng: random.Random) -> tuple[F.FinSemigroup, list[int]]:
    """A transformation semigroup generated by two random maps on a small set."""
    while True:
        n = rng.randint(2, 4)
        gens = [[rng.randrange(n) for _ in range(n)] for _ in range(2)]
        S, idx = F.transformation_semigroup(gens)
        if S.size <= 40:
            return S, idx


def lcm(xs) -> int:
    return math.lcm(*xs) if xs else 1
