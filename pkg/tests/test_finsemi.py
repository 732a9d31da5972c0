import itertools

import pytest

from vdreduce import finsemi as F
from vdreduce import kterm as K
from support import small_semigroups

SL = F.min_semilattice(2)
Z3 = F.cyclic_group(3)
Z6 = F.cyclic_group(6)


def test_verify_table_examples():
    assert F.verify_table(SL)
    assert F.verify_table(Z3)
    # x*y = (x + 1) mod 2 is not associative: (0*0)*0 = 0, 0*(0*0) = 1
    bad = F.FinSemigroup(((1, 1), (0, 0)))
    assert not F.verify_table(bad)
    assert F.associativity_witness(bad) is not None


def test_structural_error():
    with pytest.raises(F.SemigroupError):
        F.FinSemigroup(((0, 1),))
    with pytest.raises(F.SemigroupError):
        F.FinSemigroup(((0, 2), (0, 0)))


def test_identity_flag_checked():
    assert not F.verify_table(F.FinSemigroup(((0, 0), (0, 1)), True))
    assert F.verify_table(F.FinSemigroup(((0, 1), (1, 1)), True))


def test_idempotents():
    assert F.idempotents(SL) == {0, 1}
    assert F.idempotents(Z3) == {0}
    P = F.direct_product(Z3, SL)
    # brute force on the 6 pairs: only (0, e) is idempotent
    assert F.idempotents(P) == {0 * 2 + 0, 0 * 2 + 1}


def test_exponent():
    assert F.exponent(SL) == 1
    assert F.exponent(Z3) == 3
    assert F.exponent(Z6) == 6


def test_eval_word():
    d = F.GeneratorMap(("a", "b"), {"a": 1, "b": 0})
    assert F.eval_word(SL, d, "ab") == 0
    dz = F.GeneratorMap(("a", "b"), {"a": 1, "b": 2})
    assert F.eval_word(Z3, dz, "aaa") == 0
    assert F.eval_word(Z3, dz, "abab") == 0
    with pytest.raises(F.SemigroupError):
        F.eval_word(Z3, dz, "abc")


def test_omega_minus_one():
    assert F.omega_minus_one(Z3, 1) == 2
    assert F.omega_minus_one(SL, 0) == 0
    assert F.omega_minus_one(Z6, 2) == 4


def test_eval_kterm_examples():
    dz = F.GeneratorMap(("a", "b"), {"a": 1, "b": 2})
    assert F.eval_kterm(Z3, dz, K.parse("(a)^w-1")) == 2
    d = F.GeneratorMap(("a", "b"), {"a": 1, "b": 0})
    assert F.eval_kterm(SL, d, K.parse("(ab)^w-1 ab")) == 0
    for S in small_semigroups():
        for x in range(S.size):
            assert F.eval_kterm(S, {"a": x}, K.parse("a")) == x


@pytest.mark.parametrize("S", small_semigroups(), ids=repr)
def test_omega_laws(S):
    n = F.exponent(S)
    for s in range(S.size):
        w = F.omega_minus_one(S, s)
        e = S.mul(w, s)
        assert S.is_idempotent(e)
        assert S.mul(e, s) == S.mul(s, e)
        assert S.mul(S.mul(w, s), w) == w
        assert S.is_idempotent(S.power(s, n))
        assert e == F.omega(S, s)


def test_generated_closure():
    assert F.generated(Z6, [2]) == {0, 2, 4}
    assert F.generated(SL, [1]) == {1}


def test_all_tables_two_elements():
    # there are 8 associative binary operations on a 2-element set
    tables = list(F.all_tables(2))
    assert len(tables) == 8
    for S in tables:
        assert all(
            S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z))
            for x, y, z in itertools.product(range(2), repeat=3)
        )
