"""A Hilbert-style deduction system for arithmetic, checked two ways.

``check_direct`` is the obvious recursive checker.  ``machine_check`` runs the
tree-rewriting machine: a proof leaf is replaced by the conjunction of its
premises when some rule licenses the node, by 1 when it is an axiom and by 0
otherwise, and a conjunction of two bits is replaced by their product.  Both
checkers consult the same :class:`RuleTable`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Optional

from .model import Oracle, TriBool, evaluate
from .numbering import DecodeError, godel_number, pair, reflect, try_decode, unpair
from .syntax import (
    CODE, RULE_TAGS, Add, And, Bottom, DefPred, Eq, Exists, Forall, Implies, Mul, Not, NumLit,
    Or, ProofTree, Succ, Var, Zero, free_vars, is_closed_term, replace_free, substitute,
    term_vars,
)


class InvalidProof(ValueError):
    pass


# ---------------------------------------------------------------------------
# Schema matching helpers
# ---------------------------------------------------------------------------

def _imp(f, n: int):
    """Split f as A1 => (A2 => ... => B) with n antecedents; None if impossible."""
    parts = []
    for _ in range(n):
        if not isinstance(f, Implies):
            return None
        parts.append(f.left)
        f = f.right
    return (*parts, f)


def _eq(f):
    return (f.left, f.right) if isinstance(f, Eq) else None


def match_instance(body, v: int, inst):
    """Find a closed t with substitute(body, v, t) == inst.

    Returns t, ``True`` if v is not free in body and body == inst, or None.
    """
    found = []

    def term(a, b, bound):
        if isinstance(a, Var) and a.index == v and v not in bound:
            if not is_closed_term(b):
                return False
            if found:
                return found[0] == b
            found.append(b)
            return True
        if type(a) is not type(b):
            return False
        if isinstance(a, Succ):
            return term(a.arg, b.arg, bound)
        if isinstance(a, (Add, Mul)):
            return term(a.left, b.left, bound) and term(a.right, b.right, bound)
        return a == b

    def formula(a, b, bound):
        if type(a) is not type(b):
            return False
        if isinstance(a, Eq):
            return term(a.left, b.left, bound) and term(a.right, b.right, bound)
        if isinstance(a, Bottom):
            return True
        if isinstance(a, (Implies, And, Or)):
            return formula(a.left, b.left, bound) and formula(a.right, b.right, bound)
        if isinstance(a, Not):
            return formula(a.body, b.body, bound)
        if isinstance(a, (Forall, Exists)):
            return a.var == b.var and formula(a.body, b.body, bound | {a.var})
        if isinstance(a, DefPred):
            return (a.name == b.name and len(a.args) == len(b.args)
                    and all(term(x, y, bound) for x, y in zip(a.args, b.args)))
        return False

    if not formula(body, inst, frozenset()):
        return None
    return found[0] if found else True


# ---------------------------------------------------------------------------
# Axiom schemas.  Each takes the conclusion and returns True on a match.
# ---------------------------------------------------------------------------

def ax_k(f):
    s = _imp(f, 2)
    return s is not None and s[0] == s[2]


def ax_s(f):
    s = _imp(f, 2)
    if s is None:
        return False
    abc, ab, ac = s
    a1 = _imp(abc, 2)
    a2 = _imp(ab, 1)
    a3 = _imp(ac, 1)
    return (a1 is not None and a2 is not None and a3 is not None
            and a1[0] == a2[0] == a3[0] and a1[1] == a2[1] and a1[2] == a3[1])


def ax_dne(f):
    return (isinstance(f, Implies) and isinstance(f.left, Not)
            and isinstance(f.left.body, Not) and f.left.body.body == f.right)


def ax_neg_i(f):
    return (isinstance(f, Implies) and isinstance(f.left, Implies)
            and f.left.right == Bottom() and f.right == Not(f.left.left))


def ax_neg_e(f):
    s = _imp(f, 2)
    return s is not None and s[0] == Not(s[1]) and s[2] == Bottom()


def ax_efq(f):
    return isinstance(f, Implies) and f.left == Bottom()


def ax_true(f):
    return f == Not(Bottom())


def ax_and_i(f):
    s = _imp(f, 2)
    return s is not None and s[2] == And(s[0], s[1])


def ax_and_l(f):
    return isinstance(f, Implies) and isinstance(f.left, And) and f.left.left == f.right


def ax_and_r(f):
    return isinstance(f, Implies) and isinstance(f.left, And) and f.left.right == f.right


def ax_or_l(f):
    return isinstance(f, Implies) and isinstance(f.right, Or) and f.right.left == f.left


def ax_or_r(f):
    return isinstance(f, Implies) and isinstance(f.right, Or) and f.right.right == f.left


def ax_or_e(f):
    s = _imp(f, 3)
    if s is None:
        return False
    ac, bc, aorb, c = s
    return (isinstance(ac, Implies) and isinstance(bc, Implies) and ac.right == c
            and bc.right == c and aorb == Or(ac.left, bc.left))


def ax_inst(f):
    # forall x A => A[x := t], t closed
    return (isinstance(f, Implies) and isinstance(f.left, Forall)
            and match_instance(f.left.body, f.left.var, f.right) is not None)


def ax_ex_i(f):
    # A[x := t] => exists x A, t closed
    return (isinstance(f, Implies) and isinstance(f.right, Exists)
            and match_instance(f.right.body, f.right.var, f.left) is not None)


def ax_gen_dist(f):
    # forall x (A => B) => (A => forall x B), x not free in A
    s = _imp(f, 2)
    if s is None:
        return False
    q, a, fb = s
    return (isinstance(q, Forall) and isinstance(fb, Forall) and q.var == fb.var
            and q.body == Implies(a, fb.body) and q.var not in free_vars(a))


def ax_ex_e(f):
    # forall x (A => B) => (exists x A => B), x not free in B
    s = _imp(f, 2)
    if s is None:
        return False
    q, ea, b = s
    return (isinstance(q, Forall) and isinstance(ea, Exists) and q.var == ea.var
            and q.body == Implies(ea.body, b) and q.var not in free_vars(b))


def ax_eq_refl(f):
    e = _eq(f)
    return e is not None and e[0] == e[1]


def ax_eq_sym(f):
    s = _imp(f, 1)
    if s is None:
        return False
    a, b = _eq(s[0]), _eq(s[1])
    return a is not None and b is not None and a == (b[1], b[0])


def ax_eq_trans(f):
    s = _imp(f, 2)
    if s is None:
        return False
    a, b, c = (_eq(x) for x in s)
    return a is not None and b is not None and c is not None and a[1] == b[0] and c == (a[0], b[1])


def ax_eq_succ(f):
    s = _imp(f, 1)
    if s is None:
        return False
    a, b = _eq(s[0]), _eq(s[1])
    return a is not None and b is not None and b == (Succ(a[0]), Succ(a[1]))


def _eq_op(cls):
    def check(f):
        s = _imp(f, 2)
        if s is None:
            return False
        a, b, c = (_eq(x) for x in s)
        return (a is not None and b is not None and c is not None
                and c == (cls(a[0], b[0]), cls(a[1], b[1])))
    return check


ax_eq_add = _eq_op(Add)
ax_eq_mul = _eq_op(Mul)


def ax_lit_zero(f):
    return f == Eq(NumLit(0), Zero())


def ax_lit_succ(f):
    e = _eq(f)
    return (e is not None and isinstance(e[0], NumLit) and e[0].value >= 1
            and e[1] == Succ(NumLit(e[0].value - 1)))


# Robinson's axioms as open-term schemas

def q1(f):
    return isinstance(f, Not) and isinstance(f.body, Eq) and isinstance(f.body.left, Succ) \
        and f.body.right == Zero()


def q2(f):
    s = _imp(f, 1)
    if s is None:
        return False
    a, b = _eq(s[0]), _eq(s[1])
    return (a is not None and b is not None and isinstance(a[0], Succ)
            and isinstance(a[1], Succ) and b == (a[0].arg, a[1].arg))


def q3(f):
    # not (s = 0) => exists y (s = S y), y not in s
    s = _imp(f, 1)
    if s is None:
        return False
    hyp, concl = s
    if not (isinstance(hyp, Not) and isinstance(hyp.body, Eq) and hyp.body.right == Zero()):
        return False
    t = hyp.body.left
    return (isinstance(concl, Exists) and concl.var not in term_vars(t)
            and concl.body == Eq(t, Succ(Var(concl.var))))


def q4(f):
    e = _eq(f)
    return e is not None and isinstance(e[0], Add) and e[0].right == Zero() and e[0].left == e[1]


def q5(f):
    e = _eq(f)
    return (e is not None and isinstance(e[0], Add) and isinstance(e[0].right, Succ)
            and e[1] == Succ(Add(e[0].left, e[0].right.arg)))


def q6(f):
    e = _eq(f)
    return e is not None and isinstance(e[0], Mul) and e[0].right == Zero() and e[1] == Zero()


def q7(f):
    e = _eq(f)
    return (e is not None and isinstance(e[0], Mul) and isinstance(e[0].right, Succ)
            and e[1] == Add(Mul(e[0].left, e[0].right.arg), e[0].left))


def ind(f):
    # (A[x := 0] and forall x (A => A[x := S x])) => forall x A
    if not (isinstance(f, Implies) and isinstance(f.left, And) and isinstance(f.right, Forall)):
        return False
    x, a = f.right.var, f.right.body
    base, step = f.left.left, f.left.right
    if not (isinstance(step, Forall) and step.var == x):
        return False
    try:
        return (base == replace_free(a, {x: Zero()})
                and step.body == Implies(a, replace_free(a, {x: Succ(Var(x))})))
    except ValueError:
        return False


def _closure(check):
    """Accept an instance of the schema preceded by any universal quantifiers."""
    def checker(f):
        while True:
            if check(f):
                return True
            if not isinstance(f, Forall):
                return False
            f = f.body
    return checker


def _axiom(check):
    closed = _closure(check)
    return lambda conclusion, premises: not premises and closed(conclusion)


def _mp(conclusion, premises):
    return (len(premises) == 2 and isinstance(premises[0], Implies)
            and premises[0].left == premises[1] and premises[0].right == conclusion)


def _gen(conclusion, premises):
    return len(premises) == 1 and isinstance(conclusion, Forall) and conclusion.body == premises[0]


LOGICAL_AXIOMS = {
    "ax-k": ax_k, "ax-s": ax_s, "ax-dne": ax_dne, "ax-neg-i": ax_neg_i, "ax-neg-e": ax_neg_e,
    "ax-efq": ax_efq, "ax-true": ax_true, "ax-and-i": ax_and_i, "ax-and-l": ax_and_l,
    "ax-and-r": ax_and_r, "ax-or-l": ax_or_l, "ax-or-r": ax_or_r, "ax-or-e": ax_or_e,
    "ax-inst": ax_inst, "ax-ex-i": ax_ex_i, "ax-gen-dist": ax_gen_dist, "ax-ex-e": ax_ex_e,
    "ax-eq-refl": ax_eq_refl, "ax-eq-sym": ax_eq_sym, "ax-eq-trans": ax_eq_trans,
    "ax-eq-succ": ax_eq_succ, "ax-eq-add": ax_eq_add, "ax-eq-mul": ax_eq_mul,
    "ax-lit-zero": ax_lit_zero, "ax-lit-succ": ax_lit_succ,
}

ROBINSON_AXIOMS = {"q1": q1, "q2": q2, "q3": q3, "q4": q4, "q5": q5, "q6": q6, "q7": q7}


@dataclass(frozen=True)
class RuleTable:
    """Rule tag -> checker(conclusion, premise conclusions) -> bool."""
    name: str
    rules: dict = field(hash=False, compare=False)

    def licenses(self, conclusion, rule: str, premises) -> bool:
        check = self.rules.get(rule)
        return check is not None and bool(check(conclusion, tuple(premises)))


def _table(name, extra):
    rules = {"mp": _mp, "gen": _gen}
    for tag, check in {**LOGICAL_AXIOMS, **ROBINSON_AXIOMS, **extra}.items():
        rules[tag] = _axiom(check)
    return RuleTable(name, rules)


Q = _table("q", {})
PA = _table("pa", {"ind": ind})
THEORIES = {"q": Q, "pa": PA}


def theory_table(theory) -> RuleTable:
    if isinstance(theory, RuleTable):
        return theory
    try:
        return THEORIES[theory.lower()]
    except (KeyError, AttributeError):
        raise ValueError(f"unknown theory {theory!r}; use 'q' or 'pa'") from None


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

def node_ok(p: ProofTree, table: RuleTable) -> bool:
    return table.licenses(p.conclusion, p.rule, [q.conclusion for q in p.premises])


def check_direct(p: ProofTree, theory="pa") -> int:
    table = theory_table(theory)
    return int(node_ok(p, table) and all(check_direct(q, table) for q in p.premises))


@dataclass(frozen=True)
class Bit:
    value: int


@dataclass(frozen=True)
class ProofLeaf:
    proof: ProofTree


@dataclass(frozen=True)
class AndNode:
    left: object
    right: object


class Irreducible(ValueError):
    pass


def _contract_leaf(p: ProofTree, table: RuleTable):
    if not node_ok(p, table):
        return Bit(0)
    if not p.premises:
        return Bit(1)
    t = ProofLeaf(p.premises[0])
    for q in p.premises[1:]:
        t = AndNode(t, ProofLeaf(q))
    return t


def machine_step(t, theory="pa"):
    """Contract the leftmost redex of a machine tree."""
    table = theory_table(theory)
    if isinstance(t, Bit):
        raise Irreducible("a single bit is irreducible")
    # walk down to the leftmost redex, remembering the path back up
    path = []
    node = t
    while True:
        if isinstance(node, ProofLeaf):
            new = _contract_leaf(node.proof, table)
            break
        if isinstance(node.left, Bit) and isinstance(node.right, Bit):
            new = Bit(node.left.value & node.right.value)
            break
        if isinstance(node.left, Bit):
            path.append((node, "right"))
            node = node.right
        else:
            path.append((node, "left"))
            node = node.left
    for parent, side in reversed(path):
        new = AndNode(new, parent.right) if side == "left" else AndNode(parent.left, new)
    return new


def machine_steps(p: ProofTree, theory="pa") -> tuple:
    """(final bit, number of steps) for the machine started on leaf(p)."""
    table = theory_table(theory)
    t = ProofLeaf(p)
    n = 0
    while not isinstance(t, Bit):
        t = machine_step(t, table)
        n += 1
    return t.value, n


def machine_check(p: ProofTree, theory="pa") -> int:
    return machine_steps(p, theory)[0]


def proof_predicate(n: int, p: int, theory="pa") -> int:
    """1 iff n is the code of a proof whose root is the formula with code p."""
    try:
        tag, rest = unpair(n)
        if rest == 0:
            return 0
        root, _ = unpair(rest)
    except (DecodeError, ValueError):
        return 0
    if root != p:
        return 0
    proof = try_decode(n, "proof")
    if proof is None:
        return 0
    return machine_check(proof, theory)


# ---------------------------------------------------------------------------
# Generate-and-test proof search
# ---------------------------------------------------------------------------

RULE_CODES = tuple(CODE[tag] for tag in RULE_TAGS)


@dataclass(frozen=True)
class Found:
    code: int
    proof: ProofTree
    side: str = "A"


class _Candidates:
    """Codes tag ; (<A> ; L) in increasing order.

    Every proof of A has a code of this shape, and the numbering is strictly
    increasing in each argument, so visiting them through a heap reproduces
    the order of a plain scan 0, 1, 2, ... restricted to possible proofs.
    """

    def __init__(self, formula, side: str):
        self.formula = formula
        self.side = side
        self.code = godel_number(formula)
        self.inner = {}
        # Once <A> ; 0 is past the Cantor range, tag ; (<A> ; L) is a
        # shift of <A> ; L with the one-byte tag below it, so codes are
        # ordered by (L, tag) and the heap can hold those small keys.
        self.lex = pair(self.code, 0).bit_length() > 33 and max(RULE_CODES) < 256
        if self.lex:
            self.heap = [(0, t) for t in RULE_CODES]
        else:
            self.heap = [(pair(t, self._inner(0)), t, 0) for t in RULE_CODES]
        heapq.heapify(self.heap)
        self.top = None

    def _inner(self, rest: int) -> int:
        # every tag walks the same lists L in step, so <A> ; L is shared
        x = self.inner.get(rest)
        if x is None:
            if len(self.inner) > 8:
                self.inner.pop(min(self.inner))
            x = self.inner[rest] = pair(self.code, rest)
        return x

    def peek(self):
        if not self.lex:
            return self.heap[0][0]
        if self.top is None:
            rest, tag = self.heap[0]
            self.top = pair(tag, self._inner(rest))
        return self.top

    def pop(self):
        if self.lex:
            code = self.peek()
            rest, tag = heapq.heapreplace(self.heap, (self.heap[0][0] + 1, self.heap[0][1]))
            self.top = None
            return code, tag, rest
        code, tag, rest = heapq.heappop(self.heap)
        heapq.heappush(self.heap, (pair(tag, self._inner(rest + 1)), tag, rest + 1))
        return code, tag, rest


class _PremiseCache:
    def __init__(self, limit: int = 1 << 20):
        self.cache = {}
        self.limit = limit

    def premises(self, rest: int):
        """Decode L as a list of proofs, or None."""
        if rest in self.cache:
            return self.cache[rest]
        out = []
        r = rest
        try:
            while r:
                head, r = unpair(r)
                q = try_decode(head, "proof")
                if q is None:
                    out = None
                    break
                out.append(q)
        except DecodeError:
            out = None
        value = None if out is None else tuple(out)
        if len(self.cache) < self.limit:
            self.cache[rest] = value
        return value


def _test(cand: _Candidates, tag: int, rest: int, cache: _PremiseCache, table):
    premises = cache.premises(rest)
    if premises is None:
        return None
    proof = ProofTree(cand.formula, RULE_TAGS[RULE_CODES.index(tag)], premises)
    return proof if machine_check(proof, table) == 1 else None


def _search(formulas, fuel: int, theory, bound: Optional[int]):
    table = theory_table(theory)
    cands = [_Candidates(f, side) for f, side in formulas]
    cache = _PremiseCache()
    tests = 0
    while tests < fuel:
        cand = min(cands, key=_Candidates.peek)
        if bound is not None and cand.peek() > bound:
            return "exhausted"
        code, tag, rest = cand.pop()
        tests += 1
        proof = _test(cand, tag, rest, cache, table)
        if proof is not None:
            return Found(code, proof, cand.side)
    return None


def _scan(formulas, fuel: int, theory, bound: Optional[int]):
    codes = [(godel_number(f), side) for f, side in formulas]
    top = fuel if bound is None else min(fuel, bound)
    for x in range(top + 1):
        for code, side in codes:
            if proof_predicate(x, code, theory):
                return Found(x, try_decode(x, "proof"), side)
    return "exhausted" if bound is not None and bound <= fuel else None


def search_proof(formula, fuel: int, theory="pa", strategy: str = "enumerate",
                 bound: Optional[int] = None) -> Optional[Found]:
    """The least code x of a proof of ``formula``, testing at most ``fuel`` candidates.

    ``strategy="scan"`` tests every natural 0, 1, 2, ... literally.  With
    ``bound`` only codes up to ``bound`` are considered.
    """
    run = _scan if strategy == "scan" else _search
    r = run([(formula, "A")], fuel, theory, bound)
    return r if isinstance(r, Found) else None


def decide_both(formula, fuel: int, theory="pa", strategy: str = "enumerate") -> Optional[Found]:
    """One interleaved search for a proof of A or of not A; ``side`` tells which."""
    run = _scan if strategy == "scan" else _search
    r = run([(formula, "A"), (Not(formula), "not-A")], fuel, theory, None)
    return r if isinstance(r, Found) else None


def bounded_provable(formula, n: int, theory="pa") -> int:
    """1 iff some x <= n is the code of a proof of ``formula``."""
    r = _search([(formula, "A")], n + 1, theory, n)
    return int(isinstance(r, Found))


# ---------------------------------------------------------------------------
# Provability formula
# ---------------------------------------------------------------------------

def bew_formula():
    """Bew[x0] = exists x1 Proof[x1, x0, 1]."""
    return Exists(1, DefPred("Proof", (Var(1), Var(0), NumLit(1))))


def box(formula):
    return substitute(bew_formula(), 0, reflect(formula))


def proof_oracle(theory="pa", search_fuel: int = 10**4) -> Oracle:
    table = theory_table(theory)

    def relation(args):
        x, a, b = args
        return proof_predicate(x, a, table) == b

    def bit(others):
        x, a = others
        return proof_predicate(x, a, table)

    def witness(others, cap):
        a, b = others
        if b == 0:
            return 0 if proof_predicate(0, a, table) == 0 else None
        if b != 1:
            return "none"
        formula = try_decode(a, "formula")
        if formula is None:
            return "none"
        r = _search([(formula, "A")], search_fuel, table, cap)
        if isinstance(r, Found):
            return r.code
        return "none" if r == "exhausted" else None

    return Oracle(relation, 3, functional=(2, bit), witness=(0, witness))


@dataclass(frozen=True)
class NecessitationEvidence:
    formula: object
    witness: int
    formula_code: int
    proof_bit: int
    instance_true: bool
    box_formula: object
    box_true: bool


def necessitation_check(proof: ProofTree, theory="pa") -> NecessitationEvidence:
    """From a proof of A, exhibit the witness that makes Box A true."""
    table = theory_table(theory)
    if machine_check(proof, table) != 1:
        raise InvalidProof("necessitation needs a valid proof")
    w = godel_number(proof)
    a = godel_number(proof.conclusion)
    oracles = {"Proof": proof_oracle(table)}
    instance = DefPred("Proof", (NumLit(w), NumLit(a), NumLit(1)))
    b = box(proof.conclusion)
    return NecessitationEvidence(
        formula=proof.conclusion,
        witness=w,
        formula_code=a,
        proof_bit=proof_predicate(w, a, table),
        instance_true=evaluate(instance, oracles=oracles) is TriBool.TRUE,
        box_formula=b,
        box_true=evaluate(b, cap=w, oracles=oracles) is TriBool.TRUE,
    )
