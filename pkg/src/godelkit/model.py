"""Bounded evaluation of formulas in the standard model of arithmetic.

Truth in N is undecidable, so evaluation is three-valued.  Bounded
quantifiers (written with the derived order ``x <= y := exists u (u + x = y)``)
are decided exactly.  An unbounded existential first asks :func:`solve` for a
finite set of candidate witnesses that is guaranteed to contain every
witness; when there is one the quantifier is decided exactly, otherwise the
search scans ``0..cap`` and answers UNKNOWN when it finds nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .syntax import (
    Add, And, Bottom, DefPred, Eq, Exists, Forall, Implies, Mul, Not, NumLit, Or, Succ,
    Var, Zero, TOP, free_vars, substitute, term_vars,
)


class TriBool(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __invert__(self):
        if self is TriBool.TRUE:
            return TriBool.FALSE
        if self is TriBool.FALSE:
            return TriBool.TRUE
        return TriBool.UNKNOWN

    def __and__(self, other):
        if TriBool.FALSE in (self, other):
            return TriBool.FALSE
        if self is TriBool.TRUE and other is TriBool.TRUE:
            return TriBool.TRUE
        return TriBool.UNKNOWN

    def __or__(self, other):
        if TriBool.TRUE in (self, other):
            return TriBool.TRUE
        if self is TriBool.FALSE and other is TriBool.FALSE:
            return TriBool.FALSE
        return TriBool.UNKNOWN

    def __bool__(self):
        raise TypeError("TriBool has no truth value; compare with TriBool.TRUE")

    def __str__(self):
        return self.value

    @staticmethod
    def of(b: bool) -> "TriBool":
        return TriBool.TRUE if b else TriBool.FALSE


T, F, U = TriBool.TRUE, TriBool.FALSE, TriBool.UNKNOWN


class UnassignedVariable(KeyError):
    pass


class MissingOracle(KeyError):
    pass


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class Oracle:
    """Host-level meaning of a defined predicate symbol.

    ``relation`` decides the predicate on naturals.  ``functional`` is an
    optional ``(position, fn)``: the argument at ``position`` is determined by
    the others (``fn`` returns it, or None when no value makes the relation
    hold).  ``witness`` is an optional ``(position, fn)`` where
    ``fn(others, cap)`` returns a witness ``<= cap``, the string ``"none"``
    if there is provably none up to ``cap``, or None if it gave up.
    """
    relation: Callable
    arity: int
    functional: Optional[tuple] = None
    witness: Optional[tuple] = None


def eval_term(t, env: dict) -> int:
    extra = 0
    while isinstance(t, Succ):
        extra += 1
        t = t.arg
    if isinstance(t, Zero):
        v = 0
    elif isinstance(t, NumLit):
        v = t.value
    elif isinstance(t, Var):
        if t.index not in env:
            raise UnassignedVariable(f"x{t.index} is not assigned")
        v = env[t.index]
    elif isinstance(t, Add):
        v = eval_term(t.left, env) + eval_term(t.right, env)
    elif isinstance(t, Mul):
        v = eval_term(t.left, env) * eval_term(t.right, env)
    else:
        raise TypeError(f"not a term: {t!r}")
    return v + extra


# ---------------------------------------------------------------------------
# Shapes of the derived order
# ---------------------------------------------------------------------------

def order_shape(f):
    """If f is ``X <= Y`` (``exists u (u + X = Y)``) return (X, Y); else None."""
    if isinstance(f, Exists) and isinstance(f.body, Eq):
        lhs, rhs = f.body.left, f.body.right
        if isinstance(lhs, Add) and lhs.left == Var(f.var):
            x = lhs.right
            if f.var not in term_vars(x) and f.var not in term_vars(rhs):
                return x, rhs
    return None


def bound_shape(guard, z: int):
    """If guard is ``z < T`` or ``z <= T`` (z not in T) return (T, strict)."""
    shape = order_shape(guard)
    if shape is None:
        return None
    x, bound = shape
    if z in term_vars(bound):
        return None
    if x == Var(z):
        return bound, False
    if isinstance(x, Succ) and x.arg == Var(z):
        return bound, True
    return None


def _bounded(f):
    """Recognize forall z (guard => B) and exists z (guard and B); return (bound, strict, B)."""
    if isinstance(f, Forall) and isinstance(f.body, Implies):
        b = bound_shape(f.body.left, f.var)
        if b:
            return b[0], b[1], f.body.right
    if isinstance(f, Exists) and isinstance(f.body, And):
        b = bound_shape(f.body.left, f.var)
        if b:
            return b[0], b[1], f.body.right
    return None


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

class Evaluator:
    def __init__(self, cap: int = 1000, oracles: Optional[dict] = None, solve: bool = True):
        self.cap = cap
        self.oracles = oracles or {}
        self.use_solver = solve

    def eval(self, f, env: dict) -> TriBool:
        if isinstance(f, Eq):
            return TriBool.of(eval_term(f.left, env) == eval_term(f.right, env))
        if isinstance(f, Bottom):
            return F
        if isinstance(f, Not):
            return ~self.eval(f.body, env)
        if isinstance(f, And):
            left = self.eval(f.left, env)
            if left is F:
                return F
            return left & self.eval(f.right, env)
        if isinstance(f, Or):
            left = self.eval(f.left, env)
            if left is T:
                return T
            return left | self.eval(f.right, env)
        if isinstance(f, Implies):
            left = self.eval(f.left, env)
            if left is F:
                return T
            return ~left | self.eval(f.right, env)
        if isinstance(f, DefPred):
            return self.eval_defpred(f, env)
        if isinstance(f, (Forall, Exists)):
            return self.eval_quantifier(f, env)
        raise TypeError(f"not a formula: {f!r}")

    def oracle(self, name: str) -> Oracle:
        if name not in self.oracles:
            raise MissingOracle(f"no oracle registered for {name}")
        return self.oracles[name]

    def eval_defpred(self, f: DefPred, env) -> TriBool:
        o = self.oracle(f.name)
        if len(f.args) != o.arity:
            raise ValueError(f"{f.name} takes {o.arity} arguments, got {len(f.args)}")
        return TriBool.of(bool(o.relation(tuple(eval_term(a, env) for a in f.args))))

    def eval_quantifier(self, f, env) -> TriBool:
        shape = order_shape(f)
        if shape is not None:
            return TriBool.of(eval_term(shape[0], env) <= eval_term(shape[1], env))
        if f.var not in free_vars(f.body):
            return self.eval(f.body, {k: v for k, v in env.items() if k != f.var})
        bounded = _bounded(f)
        if bounded is not None and not (term_vars(bounded[0]) - env.keys()):
            bound_term, strict, body = bounded
            n = eval_term(bound_term, env)
            top = n if strict else n + 1
            if isinstance(f, Forall):
                acc = T
                for z in range(top):
                    r = self.eval(body, {**env, f.var: z})
                    if r is F:
                        return F
                    acc = acc & r
                return acc
            acc = F
            for z in range(top):
                r = self.eval(body, {**env, f.var: z})
                if r is T:
                    return T
                acc = acc | r
            return acc
        if isinstance(f, Forall):
            for z in range(self.cap + 1):
                if self.eval(f.body, {**env, f.var: z}) is F:
                    return F
            return U
        return self.eval_exists(f, env)

    def eval_exists(self, f: Exists, env) -> TriBool:
        if self.use_solver:
            candidates = self.solve(f.body, f.var, env)
            if candidates is not None:
                acc = F
                for c in sorted(candidates):
                    r = self.eval(f.body, {**env, f.var: c})
                    if r is T:
                        return T
                    acc = acc | r
                return acc
            hooked = self.witness_hook(f.body, f.var, env)
            if hooked == "none":
                return U
            if hooked is not None and self.eval(f.body, {**env, f.var: hooked}) is T:
                return T
        for z in range(self.cap + 1):
            if self.eval(f.body, {**env, f.var: z}) is T:
                return T
        return U

    def witness_hook(self, body, w, env):
        if not isinstance(body, DefPred) or body.name not in self.oracles:
            return None
        o = self.oracles[body.name]
        if o.witness is None:
            return None
        pos, fn = o.witness
        others = self._others(body, pos, w, env)
        if others is None:
            return None
        return fn(others, self.cap)

    @staticmethod
    def _others(body: DefPred, pos: int, w: int, env):
        """Values of the arguments other than ``pos`` if ``pos`` is exactly Var w."""
        if pos >= len(body.args) or body.args[pos] != Var(w):
            return None
        others = []
        for j, a in enumerate(body.args):
            if j == pos:
                continue
            if term_vars(a) - env.keys() or w in term_vars(a):
                return None
            others.append(eval_term(a, env))
        return tuple(others)

    # -- candidate witnesses ------------------------------------------------

    def solve(self, f, w: int, env: dict):
        """A finite set containing every value of x_w making f true, or None.

        Variables other than w that are not in ``env`` are treated as unknown.
        """
        env = {k: v for k, v in env.items() if k != w}
        fv = free_vars(f)
        if w not in fv:
            if fv <= env.keys() and self.eval(f, env) is F:
                return set()
            return None
        if isinstance(f, Bottom):
            return set()
        if isinstance(f, Eq):
            return _solve_linear(f, w, env)
        if isinstance(f, And):
            return self._solve_and(f, w, env)
        if isinstance(f, Or):
            left = self.solve(f.left, w, env)
            if left is None:
                return None
            right = self.solve(f.right, w, env)
            if right is None:
                return None
            return left | right
        if isinstance(f, Exists):
            return self._solve_exists(f, w, env)
        if isinstance(f, DefPred):
            o = self.oracles.get(f.name)
            if o is None or o.functional is None:
                return None
            pos, fn = o.functional
            others = self._others(f, pos, w, env)
            if others is None:
                return None
            value = fn(others)
            return set() if value is None else {value}
        return None

    def _solve_and(self, f: And, w, env):
        # any conjunct with a complete candidate set bounds the whole conjunction
        for part in (f.left, f.right):
            s = self.solve(part, w, env)
            if s is not None:
                return s
        return self._prefix_scan(f, w, env)

    def _prefix_scan(self, f: And, w, env):
        # shape: forall z (z < x_w => R) and Q, as produced for minimization
        guard = f.left
        if not (isinstance(guard, Forall) and isinstance(guard.body, Implies)):
            return None
        b = bound_shape(guard.body.left, guard.var)
        if b is None or b[0] != Var(w):
            return None
        strict = b[1]
        rest = guard.body.right
        need = (free_vars(f) - {w})
        if not need <= env.keys():
            return None
        found = set()
        for y in range(self.cap + 1):
            r = self.eval(rest, {**env, guard.var: y})
            if r is F:
                # every witness lies at or below y (strictly below for <=)
                if strict and self.eval(f, {**env, w: y}) is not F:
                    found.add(y)
                return found
            if self.eval(f.right, {**env, w: y}) is not F:
                found.add(y)
        return None

    def _solve_exists(self, f: Exists, w, env):
        inner_env = {k: v for k, v in env.items() if k != f.var}
        direct = self.solve(f.body, w, inner_env)
        if direct is not None:
            return direct
        us = self.solve(f.body, f.var, inner_env)
        if us is None:
            return None
        out = set()
        for u in us:
            s = self.solve(f.body, w, {**inner_env, f.var: u})
            if s is None:
                return None
            out |= s
        return out


def _linear(t, w: int, env):
    """(a, b) with t = a * x_w + b under env, or None if t is not linear in x_w."""
    if isinstance(t, Var):
        if t.index == w:
            return 1, 0
        if t.index in env:
            return 0, env[t.index]
        return None
    if isinstance(t, Zero):
        return 0, 0
    if isinstance(t, NumLit):
        return 0, t.value
    if isinstance(t, Succ):
        extra = 0
        while isinstance(t, Succ):
            extra += 1
            t = t.arg
        inner = _linear(t, w, env)
        return None if inner is None else (inner[0], inner[1] + extra)
    if isinstance(t, (Add, Mul)):
        left, right = _linear(t.left, w, env), _linear(t.right, w, env)
        if left is None or right is None:
            return None
        if isinstance(t, Add):
            return left[0] + right[0], left[1] + right[1]
        if left[0] and right[0]:
            return None
        return left[0] * right[1] + right[0] * left[1], left[1] * right[1]
    return None


def _solve_linear(f: Eq, w, env):
    left, right = _linear(f.left, w, env), _linear(f.right, w, env)
    if left is None or right is None:
        return None
    a, b = left[0] - right[0], right[1] - left[1]
    if a == 0:
        return None if b == 0 else set()
    if b % a or b // a < 0:
        return set()
    return {b // a}


def evaluate(f, env: Optional[dict] = None, cap: int = 1000, oracles: Optional[dict] = None,
             solve: bool = True) -> TriBool:
    """Three-valued truth of ``f`` in N under ``env`` (variable index -> natural).

    With ``solve=False`` unbounded existentials only scan ``0..cap``.
    """
    env = dict(env or {})
    missing = free_vars(f) - env.keys()
    if missing:
        raise UnassignedVariable(f"unassigned free variables: {sorted(missing)}")
    return Evaluator(cap, oracles, solve).eval(f, env)


def expand_bounded(f, which: Optional[str] = None):
    """Unfold ``forall z (z < n => B)`` (or ``<=``) into the finite conjunction of instances."""
    if not (isinstance(f, Forall) and isinstance(f.body, Implies)):
        raise ShapeError("expected forall z (z < n => B) or forall z (z <= n => B)")
    b = bound_shape(f.body.left, f.var)
    if b is None:
        raise ShapeError("guard is not a bound on the quantified variable")
    bound, strict = b
    if which is not None and which != ("lt" if strict else "le"):
        raise ShapeError(f"bound kind is {'lt' if strict else 'le'}, not {which}")
    if term_vars(bound):
        raise ShapeError("bound must be a closed term")
    n = eval_term(bound, {})
    top = n if strict else n + 1
    if top == 0:
        return TOP
    parts = [substitute(f.body.right, f.var, NumLit(i)) for i in range(top)]
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


__all__ = [
    "TriBool", "Oracle", "Evaluator", "eval_term", "evaluate", "expand_bounded",
    "order_shape", "bound_shape", "UnassignedVariable", "MissingOracle", "ShapeError",
]
