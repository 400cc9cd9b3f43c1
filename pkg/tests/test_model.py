import random

import pytest
from hypothesis import given, strategies as st

from godelkit.model import (
    MissingOracle, Oracle, ShapeError, TriBool, UnassignedVariable, eval_term, evaluate,
    expand_bounded,
)
from godelkit.syntax import (
    TOP, Add, And, Bottom, DefPred, Eq, Exists, Forall, Implies, Mul, Not, NumLit, Or, Succ, Var,
    Zero, le, lt, substitute,
)

T, F, U = TriBool.TRUE, TriBool.FALSE, TriBool.UNKNOWN


def test_eval_term_examples():
    assert eval_term(Add(NumLit(2), NumLit(3)), {}) == 5
    assert eval_term(Mul(Zero(), NumLit(9)), {}) == 0
    assert eval_term(Var(0), {0: 7}) == 7
    with pytest.raises(UnassignedVariable):
        eval_term(Var(1), {})


def test_kleene_tables():
    vals = (T, F, U)
    for a in vals:
        for b in vals:
            if U not in (a, b):
                assert (a & b) is TriBool.of(a is T and b is T)
                assert (a | b) is TriBool.of(a is T or b is T)
    assert (F & U) is F and (T | U) is T
    assert (T & U) is U and (F | U) is U
    assert ~U is U
    with pytest.raises(TypeError):
        bool(U)


def test_exists_with_witness():
    f = Exists(0, Eq(Add(Var(0), NumLit(2)), NumLit(5)))
    assert evaluate(f, cap=10) is T


def test_exists_without_witness_scan_mode_is_unknown():
    f = Exists(0, Eq(Succ(Var(0)), NumLit(0)))
    assert evaluate(f, cap=10, solve=False) is U


def test_exists_without_witness_solver_is_exact():
    f = Exists(0, Eq(Succ(Var(0)), NumLit(0)))
    assert evaluate(f, cap=10) is F


def test_bounded_forall_is_exact():
    f = Forall(0, Implies(lt(Var(0), NumLit(3), 1), le(Var(0), NumLit(2), 1)))
    assert evaluate(f, cap=0) is T


def test_unbounded_forall_unknown_without_counterexample():
    f = Forall(0, Eq(Add(Var(0), Zero()), Var(0)))
    assert evaluate(f, cap=50) is U


def test_unbounded_forall_counterexample_found():
    f = Forall(0, Not(Eq(Var(0), NumLit(7))))
    assert evaluate(f, cap=50) is F


def test_order_is_exact_for_large_values():
    assert evaluate(le(NumLit(10**30), NumLit(10**30 + 1), 0)) is T
    assert evaluate(lt(NumLit(10**30), NumLit(10**30), 0)) is F


def test_expand_bounded_examples():
    f = Forall(0, Implies(lt(Var(0), NumLit(2), 1), Eq(Var(0), Var(0))))
    assert expand_bounded(f) == And(Eq(NumLit(0), NumLit(0)), Eq(NumLit(1), NumLit(1)))
    g = Forall(0, Implies(lt(Var(0), NumLit(0), 1), Bottom()))
    assert expand_bounded(g) == TOP == Not(Bottom())


def test_expand_bounded_kind_and_shape_errors():
    f = Forall(0, Implies(lt(Var(0), NumLit(2), 1), Bottom()))
    with pytest.raises(ShapeError):
        expand_bounded(f, "le")
    with pytest.raises(ShapeError):
        expand_bounded(Forall(0, Bottom()))


def test_oracle_lookup():
    even = Oracle(lambda a: a[0] % 2 == 0, 1)
    f = DefPred("Neg", (NumLit(4),))
    assert evaluate(f, oracles={"Neg": even}) is T
    with pytest.raises(MissingOracle):
        evaluate(f)


def test_functional_oracle_decides_unbounded_exists():
    double = Oracle(lambda a: a[1] == 2 * a[0], 2, functional=(1, lambda o: 2 * o[0]))
    f = Exists(1, And(DefPred("Sub", (NumLit(21), Var(1))), Eq(Var(1), NumLit(42))))
    assert evaluate(f, cap=0, oracles={"Sub": double}) is T
    g = Exists(1, And(DefPred("Sub", (NumLit(21), Var(1))), Eq(Var(1), NumLit(41))))
    assert evaluate(g, cap=0, oracles={"Sub": double}) is F


# -- generated formulas: classicality, monotone refinement, expansion --------

def _small_term(rng, vars_):
    r = rng.random()
    if r < 0.4 and vars_:
        return Var(rng.choice(vars_))
    if r < 0.7:
        return NumLit(rng.randrange(6))
    cls = rng.choice((Add, Mul))
    return cls(_small_term(rng, vars_), _small_term(rng, vars_))


def _qf(rng, vars_, depth):
    if depth == 0 or rng.random() < 0.3:
        return Eq(_small_term(rng, vars_), _small_term(rng, vars_))
    k = rng.randrange(4)
    if k == 0:
        return Not(_qf(rng, vars_, depth - 1))
    cls = (And, Or, Implies)[k - 1]
    return cls(_qf(rng, vars_, depth - 1), _qf(rng, vars_, depth - 1))


def _with_quantifiers(rng, depth=2):
    body = _qf(rng, [0, 1], 3)
    q = rng.choice((Forall, Exists))
    inner = rng.choice((Forall, Exists))(1, body) if depth > 1 else body
    return q(0, inner)


def bounded_formula(rng):
    z = 0
    body = _qf(rng, [z, 1], 3)
    inner = Exists(1, And(le(Var(1), Var(z), 2), body)) if rng.random() < 0.5 else \
        substitute(body, 1, NumLit(rng.randrange(4)))
    guard = (lt if rng.random() < 0.5 else le)(Var(z), NumLit(rng.randrange(6)), 3)
    return Forall(z, Implies(guard, inner))


def test_expand_bounded_agrees_with_direct_evaluation():
    rng = random.Random(2)
    for _ in range(50):
        f = bounded_formula(rng)
        direct = evaluate(f, cap=0)
        assert direct is not U
        assert evaluate(expand_bounded(f), cap=0) is direct


@given(st.integers(0, 10**6))
def test_classicality_and_refinement(seed):
    rng = random.Random(seed)
    f = _with_quantifiers(rng)
    low = evaluate(f, cap=5)
    high = evaluate(f, cap=40)
    if low is not U:
        assert high is low
        assert evaluate(Not(f), cap=5) is ~low


@given(st.integers(0, 10**6))
def test_solver_and_scan_never_disagree(seed):
    rng = random.Random(seed)
    f = _with_quantifiers(rng)
    a = evaluate(f, cap=30)
    b = evaluate(f, cap=30, solve=False)
    assert U in (a, b) or a is b
