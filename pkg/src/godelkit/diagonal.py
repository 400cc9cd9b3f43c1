"""Fixed points of formulas with one free variable, and the classic instances.

For C[x0] the construction is

    D = exists z (C[z] and Sub[x1, x2, z])
    E = D[x0, x0]
    G = E[reflect(E)]

where Sub is the substitution-on-codes relation for the designated variable
x0.  Then ``godel_number(G) = sub_on_codes(<E>, <E>)``, which is checked with
exact integers every time a fixed point is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .calculus import bew_formula, proof_oracle, theory_table
from .model import Oracle
from .numbering import DecodeError, decode, godel_number, reflect
from .syntax import (
    And, DefPred, Exists, Forall, Implies, Not, NumLit, Var, all_vars, free_vars, le,
    replace_free, substitute,
)

DESIGNATED = 0


class FixpointError(ValueError):
    pass


@lru_cache(maxsize=4096)
def sub_on_codes(n: int, p: int) -> int:
    """<A[x0 := p]> for n = <A>."""
    return godel_number(substitute(decode(n, "formula"), DESIGNATED, NumLit(p)))


@lru_cache(maxsize=4096)
def neg_on_codes(n: int) -> int:
    return godel_number(Not(decode(n, "formula")))


def _partial(fn, *args):
    try:
        return fn(*args)
    except DecodeError:
        return None


def sub_oracle() -> Oracle:
    return Oracle(
        relation=lambda a: _partial(sub_on_codes, a[0], a[1]) == a[2],
        arity=3,
        functional=(2, lambda others: _partial(sub_on_codes, *others)),
    )


def neg_oracle() -> Oracle:
    return Oracle(
        relation=lambda a: _partial(neg_on_codes, a[0]) == a[1],
        arity=2,
        functional=(1, lambda others: _partial(neg_on_codes, *others)),
    )


def oracle_table(theory="pa") -> dict:
    """Proof, Sub and Neg interpreted by the checker and the syntax operations."""
    table = theory_table(theory)
    return {"Proof": proof_oracle(table), "Sub": sub_oracle(), "Neg": neg_oracle()}


@dataclass(frozen=True)
class FixpointResult:
    C: object
    D: object
    E: object
    G: object
    e_code: int
    g_code: int

    @property
    def identity_holds(self) -> bool:
        return self.g_code == sub_on_codes(self.e_code, self.e_code)


def fixpoint(c) -> FixpointResult:
    """A sentence G with G <=> C[reflect(G)], C having at most x0 free."""
    extra = free_vars(c) - {DESIGNATED}
    if extra:
        raise FixpointError(f"C may only have x{DESIGNATED} free, also has {sorted(extra)}")
    z = max(all_vars(c) | {2}) + 1
    cz = replace_free(c, {DESIGNATED: Var(z)})
    d = Exists(z, And(cz, DefPred("Sub", (Var(1), Var(2), Var(z)))))
    e = replace_free(d, {1: Var(DESIGNATED), 2: Var(DESIGNATED)})
    e_code = godel_number(e)
    g = substitute(e, DESIGNATED, NumLit(e_code))
    g_code = godel_number(g)
    if g_code != sub_on_codes(e_code, e_code):
        raise FixpointError("diagonal identity failed")
    return FixpointResult(c, d, e, g, e_code, g_code)


def equiv_unfold(r: FixpointResult):
    """C[reflect(G)]: rewrite Sub[<E>, <E>, z] to z = <G> and eliminate z."""
    return substitute(r.C, DESIGNATED, NumLit(sub_on_codes(r.e_code, r.e_code)))


def godel_sentence() -> FixpointResult:
    return fixpoint(Not(bew_formula()))


def henkin_sentence() -> FixpointResult:
    return fixpoint(bew_formula())


def loeb_sentence(p) -> FixpointResult:
    if free_vars(p):
        raise FixpointError("the Löb conclusion must be a closed formula")
    return fixpoint(Implies(bew_formula(), p))


def rosser_condition():
    """forall x1 (Proof[x1, x0, 1] => exists x2 (x2 <= x1 and exists x3 (Neg[x0, x3] and Proof[x2, x3, 1])))."""
    one = NumLit(1)
    refutation = Exists(3, And(DefPred("Neg", (Var(0), Var(3))),
                               DefPred("Proof", (Var(2), Var(3), one))))
    earlier = Exists(2, And(le(Var(2), Var(1), 4), refutation))
    return Forall(1, Implies(DefPred("Proof", (Var(1), Var(0), one)), earlier))


def rosser_sentence() -> FixpointResult:
    return fixpoint(rosser_condition())


KINDS = ("godel", "henkin", "loeb", "rosser", "custom")
