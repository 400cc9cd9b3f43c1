"""Named example programs used by the tests, the acceptance suite and the CLI."""

from math import factorial

from .computability import (
    ADD, CHI, CPAIR, DIV, EQ, LEFT, MONUS, MUL, NEQ, NOT, RIGHT, SUCC,
    P, comp, const,
)
from .syntax import Comp, Mu, Proj, Rec, SuccFn, Z

# --- primitive recursive examples (contain Rec) -----------------------------

PREDECESSOR = Rec(0, Z(0), Proj(2, 1))

# monus(x, k) by recursion on k
TRUNCATED_SUB = Rec(1, Proj(1, 1), Comp(3, 1, PREDECESSOR, (Proj(3, 3),)))

FACTORIAL = Rec(
    0,
    Comp(0, 1, SuccFn(), (Z(0),)),
    Comp(2, 2, MUL, (Comp(2, 1, SUCC, (Proj(2, 1),)), Proj(2, 2))),
)

# state after k steps is the Cantor code of (F_k, F_{k+1}), minus one
_FIB_STATE = Rec(
    0,
    const(0, 1),  # cantor_pair(0, 1) - 1
    comp(CPAIR, comp(RIGHT, P(2, 2)), comp(ADD, comp(LEFT, P(2, 2)), comp(RIGHT, P(2, 2)))),
)
FIBONACCI = comp(LEFT, _FIB_STATE)


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


REC_CORPUS = {
    "predecessor": (PREDECESSOR, lambda k: max(k - 1, 0)),
    "truncated-sub": (TRUNCATED_SUB, lambda x, k: max(x - k, 0)),
    "factorial": (FACTORIAL, factorial),
    "fibonacci": (FIBONACCI, _fib),
}

# --- Rec-free examples -------------------------------------------------------

# least y with chi(S y, x) = 0, i.e. y = x
IDENTITY_MU = Mu(1, Comp(2, 2, CHI, (Comp(2, 1, SUCC, (Proj(2, 2),)), Proj(2, 1))))

# least y with x <= y + y (ceiling of half)
HALF_UP_MU = Mu(1, comp(CHI, comp(SUCC, comp(ADD, P(2, 2), P(2, 2))), P(2, 1)))

# least y with y * y >= x (ceiling square root)
CEIL_SQRT_MU = Mu(1, comp(CHI, comp(SUCC, comp(MUL, P(2, 2), P(2, 2))), P(2, 1)))

# least y with x + y >= 5, i.e. 5 - x truncated
FIVE_MINUS_MU = Mu(1, comp(CHI, comp(SUCC, comp(ADD, P(2, 1), P(2, 2))), const(2, 5)))

# least y with y = x2 (identity on the second argument, arity 2)
SECOND_MU = Mu(2, comp(NEQ, P(3, 3), P(3, 2)))

# mu over a g that is never 0: chi(x, x) = 1 always
NEVER_ZERO = Mu(1, comp(CHI, P(2, 1), P(2, 1)))

MU_CORPUS = {
    "identity-mu": (IDENTITY_MU, lambda x: x),
    "half-up-mu": (HALF_UP_MU, lambda x: (x + 1) // 2),
    "ceil-sqrt-mu": (CEIL_SQRT_MU, lambda x: next(y for y in range(x + 1) if y * y >= x)),
    "five-minus-mu": (FIVE_MINUS_MU, lambda x: max(5 - x, 0)),
    "second-mu": (SECOND_MU, lambda x, y: y),
}

# Twenty Rec-free programs with reference implementations (inputs are small).
REC_FREE_CORPUS = {
    "zero0": (Z(0), lambda: 0),
    "zero2": (Z(2), lambda x, y: 0),
    "proj3_2": (Proj(3, 2), lambda x, y, z: y),
    "succ": (SUCC, lambda x: x + 1),
    "add": (ADD, lambda x, y: x + y),
    "mul": (MUL, lambda x, y: x * y),
    "chileq": (CHI, lambda x, y: 1 if x <= y else 0),
    "const3": (const(1, 3), lambda x: 3),
    "double": (comp(ADD, P(1, 1), P(1, 1)), lambda x: 2 * x),
    "square-plus-one": (comp(SUCC, comp(MUL, P(1, 1), P(1, 1))), lambda x: x * x + 1),
    "swap-chileq": (comp(CHI, P(2, 2), P(2, 1)), lambda x, y: 1 if y <= x else 0),
    "not": (NOT, lambda x: 1 if x == 0 else 0),
    "eq": (EQ, lambda x, y: 1 if x == y else 0),
    "monus": (MONUS, lambda x, y: max(x - y, 0)),
    **{name: entry for name, entry in MU_CORPUS.items()},
    "div-by-succ": (comp(DIV, P(2, 1), comp(SUCC, P(2, 2))), lambda x, y: x // (y + 1)),
}

assert len(REC_FREE_CORPUS) == 20

NAMED_PROGRAMS = {
    **{k: v[0] for k, v in REC_CORPUS.items()},
    **{k: v[0] for k, v in REC_FREE_CORPUS.items()},
    "never-zero": NEVER_ZERO,
}
