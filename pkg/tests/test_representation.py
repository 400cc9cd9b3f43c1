from itertools import product

import pytest

from godelkit.computability import FuelExhausted, Value, arity, run
from godelkit.corpus import FACTORIAL, IDENTITY_MU, MU_CORPUS, NEVER_ZERO, REC_FREE_CORPUS
from godelkit.model import TriBool, evaluate
from godelkit.representation import (
    RecNotAllowed, check_weak_representation, compile, instantiate, strong_rep_bounded,
    strong_rep_formula, to_halting_formula,
)
from godelkit.text import show
from godelkit.syntax import (
    And, Eq, Exists, Forall, Implies, NumLit, Succ, SuccFn, Var, Z, Zero, free_vars, iff,
)

T, F, U = TriBool.TRUE, TriBool.FALSE, TriBool.UNKNOWN
Y = Var(0)


def test_compile_base_cases():
    assert compile(Z(2)).formula == Eq(Y, Zero())
    assert compile(SuccFn()).formula == Eq(Y, Succ(Var(1)))


def test_compile_mu_shape():
    f = compile(IDENTITY_MU).formula
    assert isinstance(f, And)
    smaller, at_y = f.left, f.right
    assert isinstance(smaller, Forall) and isinstance(smaller.body, Implies)
    assert isinstance(smaller.body.right, Exists)
    assert "(lit 0)" in show(at_y)


def test_compile_rejects_rec():
    with pytest.raises(RecNotAllowed):
        compile(FACTORIAL)


@pytest.mark.parametrize("name", sorted(REC_FREE_CORPUS))
def test_free_variables_are_arguments_and_y(name):
    p, _ = REC_FREE_CORPUS[name]
    rep = compile(p)
    assert free_vars(rep.formula) <= set(range(arity(p) + 1))


def test_weak_representation_examples():
    assert check_weak_representation(SuccFn(), [2], 3) is T
    assert check_weak_representation(SuccFn(), [2], 4) is F
    assert check_weak_representation(IDENTITY_MU, [3], 3, cap=50) is T


@pytest.mark.parametrize("name", ["double", "eq", "monus", "half-up-mu", "div-by-succ"])
def test_weak_representation_small_grid(name):
    p, ref = REC_FREE_CORPUS[name]
    for args in product(range(3), repeat=arity(p)):
        for q in range(6):
            want = T if ref(*args) == q else F
            assert check_weak_representation(p, list(args), q) is want, (args, q)


def test_strong_rep_formula_succ():
    f = strong_rep_formula(SuccFn(), [4])
    assert f == Forall(0, iff(Eq(Y, Succ(NumLit(4))), Eq(Y, NumLit(5))))
    assert evaluate(strong_rep_bounded(SuccFn(), [4], 10), cap=0) is T


def test_strong_rep_formula_zero():
    f = strong_rep_formula(Z(1), [9])
    assert f == Forall(0, iff(Eq(Y, Zero()), Eq(Y, NumLit(0))))
    assert evaluate(strong_rep_bounded(Z(1), [9], 10), cap=0) is T


@pytest.mark.parametrize("name", sorted(MU_CORPUS))
def test_strong_rep_bounded_mu_corpus(name):
    p, _ = MU_CORPUS[name]
    for args in product(range(4), repeat=arity(p)):
        assert evaluate(strong_rep_bounded(p, list(args), 10), cap=0) is T


def test_strong_rep_bounded_detects_wrong_program():
    # the formula of Succ with the value claimed by Z(1) is false at y = 1
    rep = compile(SuccFn())
    wrong = Forall(0, iff(instantiate(rep, [0]), Eq(Y, NumLit(0))))
    assert evaluate(wrong, cap=20) is F


def test_halting_formula_examples():
    assert to_halting_formula(SuccFn(), [2]) == Exists(0, Eq(Y, Succ(NumLit(2))))
    assert evaluate(to_halting_formula(SuccFn(), [2]), cap=10) is T


@pytest.mark.parametrize("cap", [0, 10, 30])
def test_never_zero_halting_formula_is_never_true(cap):
    h = to_halting_formula(NEVER_ZERO, [3])
    assert evaluate(h, cap=cap, solve=False) is U
    assert evaluate(h, cap=cap) is not T


def test_reduction_consistency_on_corpus():
    for name, (p, _) in REC_FREE_CORPUS.items():
        for args in product(range(3), repeat=arity(p)):
            if evaluate(to_halting_formula(p, list(args)), cap=100) is T:
                assert isinstance(run(p, list(args), 10**6), Value), name
    assert run(NEVER_ZERO, [3], 10**3) is FuelExhausted
