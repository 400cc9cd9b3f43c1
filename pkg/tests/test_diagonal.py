import random

import pytest

from godelkit.calculus import box, decide_both
from godelkit.diagonal import (
    FixpointError, equiv_unfold, fixpoint, godel_sentence, henkin_sentence, loeb_sentence,
    neg_on_codes, oracle_table, rosser_sentence, sub_on_codes,
)
from godelkit.model import TriBool, evaluate
from godelkit.numbering import godel_number, reflect, size_bound
from godelkit.syntax import (
    Add, And, Bottom, DefPred, Eq, Exists, Not, NumLit, Var, substitute,
)

from gen import random_formula

T = TriBool.TRUE
EVEN = Exists(1, Eq(Add(Var(1), Var(1)), Var(0)))


def test_sub_on_codes_example():
    f = Eq(Var(0), Var(0))
    assert sub_on_codes(godel_number(f), 5) == godel_number(Eq(NumLit(5), NumLit(5)))


def test_sub_on_closed_formula_is_identity():
    f = Eq(NumLit(2), NumLit(2))
    assert sub_on_codes(godel_number(f), 9) == godel_number(f)


def test_sub_and_neg_commute_with_numbering():
    rng = random.Random(8)
    for _ in range(100):
        a = random_formula(rng, 20)
        p = rng.randrange(10**6)
        assert sub_on_codes(godel_number(a), p) == godel_number(substitute(a, 0, NumLit(p)))
        assert neg_on_codes(godel_number(a)) == godel_number(Not(a))


def test_neg_on_codes_examples():
    assert neg_on_codes(godel_number(Bottom())) == godel_number(Not(Bottom()))
    assert neg_on_codes(neg_on_codes(godel_number(Bottom()))) == godel_number(Not(Not(Bottom())))


def test_oracles_reject_non_codes():
    o = oracle_table()
    assert not o["Sub"].relation((0, 0, 0))
    assert o["Sub"].functional[1]((0, 3)) is None
    assert o["Neg"].functional[1]((0,)) is None


def test_godel_sentence_shape_and_identity():
    r = godel_sentence()
    assert r.identity_holds
    assert r.G == substitute(r.E, 0, reflect(r.E))
    z = r.G.var
    assert isinstance(r.G, Exists)
    assert r.G.body.left == Not(box_at(z))
    assert r.G.body.right == DefPred("Sub", (NumLit(r.e_code), NumLit(r.e_code), Var(z)))


def box_at(z):
    return Exists(1, DefPred("Proof", (Var(1), Var(z), NumLit(1))))


def test_godel_unfolds_to_not_box_g():
    r = godel_sentence()
    assert equiv_unfold(r) == Not(box(r.G))


@pytest.mark.parametrize("make", [godel_sentence, henkin_sentence, rosser_sentence,
                                  lambda: loeb_sentence(Bottom())])
def test_named_sentences_satisfy_identity(make):
    r = make()
    assert r.identity_holds
    assert r.g_code == sub_on_codes(r.e_code, r.e_code)
    assert r.g_code.bit_length() <= size_bound(r.G)


def test_evenness_fixpoint_matches_parity():
    r = fixpoint(EVEN)
    want = TriBool.of(r.g_code % 2 == 0)
    assert evaluate(r.G, cap=10, oracles=oracle_table()) is want
    assert evaluate(equiv_unfold(r), cap=10, oracles=oracle_table()) is want


def test_tautological_c():
    r = fixpoint(Eq(Var(0), Var(0)))
    assert evaluate(r.G, cap=10, oracles=oracle_table()) is T
    assert equiv_unfold(r) == Eq(NumLit(r.g_code), NumLit(r.g_code))


def test_fixpoint_rejects_extra_free_variables():
    with pytest.raises(FixpointError):
        fixpoint(Eq(Var(0), Var(1)))
    with pytest.raises(FixpointError):
        loeb_sentence(Eq(Var(2), Var(2)))


def test_c_binding_x0_internally():
    # C = (x0 = x0 and exists x0 (x0 = x0)): the inner x0 stays bound
    c = And(Eq(Var(0), Var(0)), Exists(0, Eq(Var(0), Var(0))))
    r = fixpoint(c)
    assert r.identity_holds
    assert evaluate(r.G, cap=5, oracles=oracle_table()) is T


def test_godel_sentence_not_decided_at_desk_fuel():
    assert decide_both(godel_sentence().G, 10**4) is None
