"""Programs for computable functions: arity checking, an interpreter with fuel,
Gödel's beta function, and elimination of primitive recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, lcm

from .numbering import cantor_pair
from .syntax import (
    AddFn,
    ChiLeq,
    Comp,
    MulFn,
    Mu,
    MuSolver,
    Proj,
    Rec,
    SuccFn,
    Z,
)


class MalformedProgram(ValueError):
    pass


@dataclass(frozen=True)
class Value:
    value: int


class _FuelExhausted:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FuelExhausted"


FuelExhausted = _FuelExhausted()


def arity(p) -> int:
    if isinstance(p, Proj):
        if not 1 <= p.i <= p.n:
            raise MalformedProgram(f"projection index {p.i} out of range 1..{p.n}: {p!r}")
        return p.n
    if isinstance(p, Z):
        return p.n
    if isinstance(p, SuccFn):
        return 1
    if isinstance(p, (AddFn, MulFn, ChiLeq)):
        return 2
    if isinstance(p, Comp):
        if len(p.gs) != p.m:
            raise MalformedProgram(f"composition expects {p.m} inner programs, has {len(p.gs)}")
        if arity(p.h) != p.m:
            raise MalformedProgram(f"outer program of {p!r} must have arity {p.m}")
        for g in p.gs:
            if arity(g) != p.n:
                raise MalformedProgram(f"inner program {g!r} must have arity {p.n}")
        return p.n
    if isinstance(p, Mu):
        if arity(p.g) != p.n + 1:
            raise MalformedProgram(f"minimized program of {p!r} must have arity {p.n + 1}")
        return p.n
    if isinstance(p, Rec):
        if arity(p.base) != p.n:
            raise MalformedProgram(f"base case of {p!r} must have arity {p.n}")
        if arity(p.step) != p.n + 2:
            raise MalformedProgram(f"step of {p!r} must have arity {p.n + 2}")
        return p.n + 1
    raise MalformedProgram(f"not a program: {p!r}")


def has_rec(p) -> bool:
    if isinstance(p, Rec):
        return True
    if isinstance(p, Comp):
        return has_rec(p.h) or any(has_rec(g) for g in p.gs)
    if isinstance(p, Mu):
        return has_rec(p.g)
    return False


class _OutOfFuel(Exception):
    pass


class _Machine:
    def __init__(self, fuel: int, literal: bool):
        self.fuel = fuel
        self.literal = literal

    def tick(self):
        if self.fuel <= 0:
            raise _OutOfFuel
        self.fuel -= 1

    def call(self, p, args):
        if isinstance(p, Proj):
            return args[p.i - 1]
        if isinstance(p, Z):
            return 0
        if isinstance(p, SuccFn):
            return args[0] + 1
        if isinstance(p, AddFn):
            return args[0] + args[1]
        if isinstance(p, MulFn):
            return args[0] * args[1]
        if isinstance(p, ChiLeq):
            return 1 if args[0] <= args[1] else 0
        if isinstance(p, Comp):
            return self.call(p.h, [self.call(g, args) for g in p.gs])
        if isinstance(p, Mu):
            return self.minimize(p, args)
        if isinstance(p, Rec):
            *xs, k = args
            acc = self.call(p.base, xs)
            for i in range(k):
                self.tick()
                acc = self.call(p.step, [*xs, i, acc])
            return acc
        raise MalformedProgram(f"not a program: {p!r}")

    def minimize(self, p, args):
        if p.solver is not None and not self.literal:
            w = p.solver.find(args)
            if w is not None and w >= 0:
                self.tick()
                if self.call(p.g, [*args, w]) == 0:
                    if not p.solver.least or w == 0:
                        return w
                    self.tick()
                    if self.call(p.g, [*args, w - 1]) != 0:
                        return w
        y = 0
        while True:
            self.tick()
            if self.call(p.g, [*args, y]) == 0:
                return y
            y += 1


def run(p, args, fuel: int = 10**5, literal: bool = False):
    """Run program ``p`` on ``args``.

    Fuel is spent on every minimization candidate tested and every recursion
    unfolding.  With ``literal`` the host-side witness finders attached to
    Mu nodes are ignored and every search counts up from 0.
    """
    n = arity(p)
    args = list(args)
    if len(args) != n:
        raise MalformedProgram(f"program of arity {n} applied to {len(args)} arguments")
    if any((not isinstance(a, int)) or a < 0 for a in args):
        raise ValueError("arguments must be naturals")
    machine = _Machine(fuel, literal)
    try:
        return Value(machine.call(p, args))
    except _OutOfFuel:
        return FuelExhausted
    except RecursionError:
        return FuelExhausted


def beta(a: int, b: int, i: int) -> int:
    return a % (1 + (i + 1) * b)


def beta_encode(seq) -> tuple:
    """A pair (a, b) with beta(a, b, i) = seq[i] for every position i."""
    seq = list(seq)
    if not seq:
        return 0, 0
    b = lcm(*range(1, len(seq) + 1)) * (max(seq) + 1)
    a, modulus = 0, 1
    for i, v in enumerate(seq):
        m = 1 + (i + 1) * b
        # solve a' = a (mod modulus), a' = v (mod m)
        t = ((v - a) * pow(modulus, -1, m)) % m
        a += modulus * t
        modulus *= m
    return a, b


# ---------------------------------------------------------------------------
# Small library of Rec-free programs.  Every minimization here is either
# upward closed (so a host hint for the least witness can be certified in
# two evaluations) or carries no hint at all.
# ---------------------------------------------------------------------------

SUCC, ADD, MUL, CHI = SuccFn(), AddFn(), MulFn(), ChiLeq()


def P(n: int, i: int) -> Proj:
    return Proj(n, i)


def comp(h, *gs, n: int | None = None):
    """h(g1, ..., gm); the arity n is taken from the inner programs."""
    if n is None:
        if not gs:
            raise MalformedProgram("give n explicitly for a composition without inner programs")
        n = arity(gs[0])
    return Comp(n, len(gs), h, tuple(gs))


def const(n: int, c: int):
    p = Z(n)
    for _ in range(c):
        p = Comp(n, 1, SUCC, (p,))
    return p


def _hint(fn):
    return MuSolver(fn, least=True)


# x - y truncated at 0: least d with x <= y + d
MONUS = Mu(2, comp(CHI, comp(SUCC, comp(ADD, P(3, 2), P(3, 3))), P(3, 1)),
           solver=_hint(lambda a: max(a[0] - a[1], 0)))

# 1 if b = 0 else 0
NOT = comp(CHI, P(1, 1), Z(1))

# 1 if a = b else 0
EQ = comp(MUL, comp(CHI, P(2, 1), P(2, 2)), comp(CHI, P(2, 2), P(2, 1)))

# 0 if a = b else 1
NEQ = comp(NOT, EQ)

# a // m for m >= 1: least q with a < (q + 1) m
DIV = Mu(2, comp(CHI, comp(MUL, comp(SUCC, P(3, 3)), P(3, 2)), P(3, 1)),
         solver=_hint(lambda a: a[0] // a[1] if a[1] else None))

MOD = comp(MONUS, P(2, 1), comp(MUL, P(2, 2), DIV))

# beta(a, b, i) = a mod (1 + (i + 1) b)
BETA = comp(MOD, P(3, 1), comp(SUCC, comp(MUL, comp(SUCC, P(3, 3)), P(3, 2))))

# Cantor decoding of the code c + 1: s is the least t with 2c < (t + 1)(t + 2)
_TRI_ROOT = Mu(1, comp(CHI, comp(MUL, comp(SUCC, P(2, 2)), comp(SUCC, comp(SUCC, P(2, 2)))),
                         comp(ADD, P(2, 1), P(2, 1))),
               solver=_hint(lambda a: (isqrt(8 * a[0] + 1) - 1) // 2))
_TRIANGLE = comp(DIV, comp(MUL, _TRI_ROOT, comp(SUCC, _TRI_ROOT)), const(1, 2))

# left and right components of the Cantor pair with code c + 1
LEFT = comp(MONUS, P(1, 1), _TRIANGLE)
RIGHT = comp(MONUS, _TRI_ROOT, LEFT)

# (a, b) -> cantor_pair(a, b) - 1
CPAIR = comp(ADD, comp(DIV, comp(MUL, comp(ADD, P(2, 1), P(2, 2)),
                                   comp(SUCC, comp(ADD, P(2, 1), P(2, 2)))),
                        const(2, 2)),
             P(2, 1))


# ---------------------------------------------------------------------------
# Elimination of Rec
# ---------------------------------------------------------------------------

def _lift(p, total: int, picks):
    """Compose p (arity len(picks)) with projections ``picks`` out of ``total`` arguments."""
    return Comp(total, len(picks), p, tuple(Proj(total, j) for j in picks))


def _eliminate_one(r: Rec, base, step):
    # base and step are already Rec-free; r's own parts are used only by the host hint
    n = r.n
    # Inner search over i, arguments (x1..xn, k, c, i): zero iff i >= k or step check fails at i.
    t = n + 3
    xs = list(range(1, n + 1))
    k_, c_, i_ = n + 1, n + 2, n + 3
    a_of_c = _lift(LEFT, t, [c_])
    b_of_c = _lift(RIGHT, t, [c_])
    beta_at = lambda idx: Comp(t, 3, BETA, (a_of_c, b_of_c, idx))
    beta_i = beta_at(P(t, i_))
    beta_si = beta_at(comp(SUCC, P(t, i_)))
    step_i = Comp(t, n + 2, step, tuple([P(t, j) for j in xs] + [P(t, i_), beta_i]))
    in_range = comp(CHI, comp(SUCC, P(t, i_)), P(t, k_))
    first_bad = Mu(n + 2, comp(MUL, in_range, Comp(t, 2, EQ, (beta_si, step_i))))

    # Outer search over c, arguments (x1..xn, k, c).
    u = n + 2
    a_u = _lift(LEFT, u, [u])
    b_u = _lift(RIGHT, u, [u])
    beta_0 = Comp(u, 3, BETA, (a_u, b_u, Z(u)))
    base_u = Comp(u, n, base, tuple(P(u, j) for j in xs))
    ok_base = Comp(u, 2, EQ, (beta_0, base_u))
    ok_steps = Comp(u, 2, EQ, (first_bad, P(u, n + 1)))
    trace_ok = Comp(u, 1, NOT, (Comp(u, 2, MUL, (ok_base, ok_steps)),))

    def find_trace(args):
        *xs_v, k = args
        v = run(r.base, xs_v, fuel=10**6)
        if v is FuelExhausted:
            return None
        seq = [v.value]
        for i in range(k):
            nxt = run(r.step, [*xs_v, i, seq[-1]], fuel=10**6)
            if nxt is FuelExhausted:
                return None
            seq.append(nxt.value)
        a, b = beta_encode(seq)
        return cantor_pair(a, b) - 1

    witness = Mu(n + 1, trace_ok, solver=MuSolver(find_trace, least=False))
    s = n + 1
    return Comp(s, 3, BETA, (comp(LEFT, witness), comp(RIGHT, witness), P(s, s)))


def eliminate_rec(p):
    """An equivalent program without Rec, using beta-coded traces and minimization."""
    arity(p)
    if isinstance(p, Rec):
        base, step = eliminate_rec(p.base), eliminate_rec(p.step)
        return _eliminate_one(p, base, step)
    if isinstance(p, Comp):
        return Comp(p.n, p.m, eliminate_rec(p.h), tuple(eliminate_rec(g) for g in p.gs))
    if isinstance(p, Mu):
        return Mu(p.n, eliminate_rec(p.g), solver=p.solver)
    return p
