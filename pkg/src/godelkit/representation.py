"""Compilation of Rec-free programs to arithmetic formulas, and the weak/strong
representation and halting reduction built on it.

Variable convention: ``y`` is ``x0`` and the arguments are ``x1 .. xn``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .computability import FuelExhausted, arity, has_rec, run
from .model import TriBool, evaluate
from .syntax import (
    Add, AddFn, And, ChiLeq, Comp, Eq, Exists, Forall, Implies, Mu, Mul, MulFn, NumLit, Or,
    Proj, Rec, Succ, SuccFn, Var, Z, Zero, all_vars, iff, le, lt, replace_free,
)

Y = Var(0)


class RecNotAllowed(ValueError):
    pass


@dataclass(frozen=True)
class RepFormula:
    program: object
    formula: object
    arity: int


def x(i: int) -> Var:
    return Var(i)


def _compile(p):
    if isinstance(p, Proj):
        return Eq(Y, x(p.i))
    if isinstance(p, Z):
        return Eq(Y, Zero())
    if isinstance(p, SuccFn):
        return Eq(Y, Succ(x(1)))
    if isinstance(p, AddFn):
        return Eq(Y, Add(x(1), x(2)))
    if isinstance(p, MulFn):
        return Eq(Y, Mul(x(1), x(2)))
    if isinstance(p, ChiLeq):
        return Or(And(le(x(1), x(2), 3), Eq(Y, NumLit(1))),
                  And(lt(x(2), x(1), 3), Eq(Y, NumLit(0))))
    if isinstance(p, Comp):
        bs = [_compile(g) for g in p.gs]
        c = _compile(p.h)
        top = max([p.n, p.m, *(max(all_vars(f), default=0) for f in (*bs, c))])
        ws = [top + 1 + j for j in range(p.m)]
        parts = [replace_free(b, {0: Var(w)}) for b, w in zip(bs, ws)]
        body = replace_free(c, {j + 1: Var(w) for j, w in enumerate(ws)})
        for part in reversed(parts):
            body = And(part, body)
        for w in reversed(ws):
            body = Exists(w, body)
        return body
    if isinstance(p, Mu):
        b = _compile(p.g)
        top = max(p.n + 1, max(all_vars(b), default=0))
        z, w, u = top + 1, top + 2, top + 3
        smaller = replace_free(b, {p.n + 1: Var(z), 0: Succ(Var(w))})
        at_y = replace_free(b, {p.n + 1: Y, 0: NumLit(0)})
        return And(Forall(z, Implies(lt(Var(z), Y, u), Exists(w, smaller))), at_y)
    if isinstance(p, Rec):
        raise RecNotAllowed("compile accepts Rec-free programs only; run eliminate_rec first")
    raise TypeError(f"not a program: {p!r}")


def compile(p) -> RepFormula:
    """The formula A[x1..xn, y] associated with the construction of ``p``."""
    n = arity(p)
    if has_rec(p):
        raise RecNotAllowed("compile accepts Rec-free programs only; run eliminate_rec first")
    return RepFormula(p, _compile(p), n)


def instantiate(rep: RepFormula, args, y=None):
    """A[args, y]: plug numerals for the arguments (and y, if given)."""
    if len(args) != rep.arity:
        raise ValueError(f"expected {rep.arity} arguments, got {len(args)}")
    mapping = {i + 1: NumLit(a) for i, a in enumerate(args)}
    if y is not None:
        mapping[0] = y if not isinstance(y, int) else NumLit(y)
    return replace_free(rep.formula, mapping)


def check_weak_representation(p, args, q: int, cap: int = 1000, oracles=None) -> TriBool:
    rep = compile(p)
    env = {i + 1: a for i, a in enumerate(args)}
    env[0] = q
    if len(args) != rep.arity:
        raise ValueError(f"expected {rep.arity} arguments, got {len(args)}")
    return evaluate(rep.formula, env, cap=cap, oracles=oracles)


def _value(p, args, fuel):
    r = run(p, args, fuel)
    if r is FuelExhausted:
        raise ValueError("program did not terminate within the fuel budget")
    return r.value


def strong_rep_formula(p, args, fuel: int = 10**5):
    """forall y (A[args, y] <=> y = f(args)), with f(args) computed by the interpreter."""
    rep = compile(p)
    r = NumLit(_value(p, args, fuel))
    return Forall(0, iff(instantiate(rep, args), Eq(Y, r)))


def strong_rep_bounded(p, args, bound: int, fuel: int = 10**5):
    """The same equivalence restricted to y <= bound, which is decided exactly."""
    rep = compile(p)
    r = NumLit(_value(p, args, fuel))
    a = instantiate(rep, args)
    return Forall(0, Implies(le(Y, NumLit(bound), _fresh_above(a)), iff(a, Eq(Y, r))))


def _fresh_above(f) -> int:
    return max(all_vars(f), default=0) + 1


def to_halting_formula(p, args):
    """exists y A[args, y]: true in N exactly when p halts on args."""
    return Exists(0, instantiate(compile(p), args))
