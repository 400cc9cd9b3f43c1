"""Abstract syntax of arithmetic, proofs and programs, and its articulated-tree view.

Every syntactic object is a frozen dataclass.  ``to_articulated`` turns any of
them into an :class:`ArticulatedTree` whose labels are codes from the fixed
alphabet :data:`ALPHABET`; ``from_articulated`` is its checked inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union


# ---------------------------------------------------------------------------
# Alphabet (the 0-articulated base set).  Codes are positions in this tuple.
# ---------------------------------------------------------------------------

RULE_TAGS = (
    "mp", "gen",
    "ax-k", "ax-s", "ax-dne", "ax-neg-i", "ax-neg-e", "ax-efq", "ax-true",
    "ax-and-i", "ax-and-l", "ax-and-r", "ax-or-l", "ax-or-r", "ax-or-e",
    "ax-inst", "ax-ex-i", "ax-gen-dist", "ax-ex-e",
    "ax-eq-refl", "ax-eq-sym", "ax-eq-trans", "ax-eq-succ", "ax-eq-add", "ax-eq-mul",
    "ax-lit-zero", "ax-lit-succ",
    "q1", "q2", "q3", "q4", "q5", "q6", "q7",
    "ind",
)

PREDICATES = ("Proof", "Sub", "Neg")

ALPHABET = (
    "0", "S", "+", "*", "=", "bot", "=>", "and", "or", "not", "forall", "exists",
    "var", "lit", "bit0", "bit1", "bitend", "defpred",
    *PREDICATES,
    "proj", "z", "succ", "add", "mul", "chileq", "comp", "mu", "rec",
    *RULE_TAGS,
)

CODE = {name: i for i, name in enumerate(ALPHABET)}


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True, eq=False)
class Succ:
    arg: "Term"

    # successor chains can be thousands deep; compare and hash them in a loop
    def _unwind(self):
        depth, t = 0, self
        while type(t) is Succ:
            depth, t = depth + 1, t.arg
        return depth, t

    def __eq__(self, other):
        if type(other) is not Succ:
            return NotImplemented
        return self._unwind() == other._unwind()

    def __hash__(self):
        return hash(("S", *self._unwind()))


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class NumLit:
    value: int


Term = Union[Zero, Succ, Add, Mul, Var, NumLit]
TERM_TYPES = (Zero, Succ, Add, Mul, Var, NumLit)


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class DefPred:
    """Oracle-defined predicate applied to terms (``Proof``, ``Sub`` or ``Neg``)."""
    name: str
    args: tuple

    def __post_init__(self):
        if self.name not in PREDICATES:
            raise ValueError(f"unknown predicate symbol {self.name!r}")
        object.__setattr__(self, "args", tuple(self.args))


Formula = Union[Eq, Bottom, Implies, And, Or, Not, Forall, Exists, DefPred]
FORMULA_TYPES = (Eq, Bottom, Implies, And, Or, Not, Forall, Exists, DefPred)
BINARY_CONNECTIVES = {Implies: "=>", And: "and", Or: "or"}
QUANTIFIERS = {Forall: "forall", Exists: "exists"}


# ---------------------------------------------------------------------------
# Proofs and programs (numbered like everything else, so they live here too)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProofTree:
    conclusion: Formula
    rule: str
    premises: tuple = ()

    def __post_init__(self):
        if self.rule not in RULE_TAGS:
            raise ValueError(f"unknown rule tag {self.rule!r}")
        object.__setattr__(self, "premises", tuple(self.premises))


@dataclass(frozen=True)
class Proj:
    n: int
    i: int


@dataclass(frozen=True)
class Z:
    n: int


@dataclass(frozen=True)
class SuccFn:
    pass


@dataclass(frozen=True)
class AddFn:
    pass


@dataclass(frozen=True)
class MulFn:
    pass


@dataclass(frozen=True)
class ChiLeq:
    pass


@dataclass(frozen=True)
class Comp:
    n: int
    m: int
    h: "Program"
    gs: tuple

    def __post_init__(self):
        object.__setattr__(self, "gs", tuple(self.gs))


@dataclass(frozen=True)
class Mu:
    """Least y with g(x1..xn, y) = 0.

    ``solver`` is an optional host-side witness finder used by the
    interpreter's fast path; it is not part of the syntax (ignored by
    equality, printing and numbering).
    """
    n: int
    g: "Program"
    solver: Optional["MuSolver"] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Rec:
    n: int
    base: "Program"
    step: "Program"


@dataclass(frozen=True)
class MuSolver:
    """Witness finder attached to a :class:`Mu` node.

    ``find(args)`` returns a candidate witness or None.  With ``least`` the
    search predicate is upward closed, so ``g(w) = 0`` and ``g(w-1) != 0``
    certify minimality; otherwise the witness is only checked for ``g(w) = 0``.
    """
    find: Callable
    least: bool = True


Program = Union[Proj, Z, SuccFn, AddFn, MulFn, ChiLeq, Comp, Mu, Rec]
PROGRAM_TYPES = (Proj, Z, SuccFn, AddFn, MulFn, ChiLeq, Comp, Mu, Rec)


# ---------------------------------------------------------------------------
# Variables, purity, size
# ---------------------------------------------------------------------------

def _cached(x, key, compute):
    # syntax nodes are immutable, so derived data can be memoized on the node
    d = x.__dict__
    if key not in d:
        object.__setattr__(x, key, frozenset(compute(x)))
    return d[key]


def _term_vars(t) -> set:
    out = set()
    stack = [t]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            out.add(t.index)
        elif isinstance(t, Succ):
            stack.append(t.arg)
        elif isinstance(t, (Add, Mul)):
            stack.append(t.left)
            stack.append(t.right)
    return out


def term_vars(t: Term) -> frozenset:
    if isinstance(t, (Zero, NumLit)):
        return frozenset()
    if isinstance(t, Var):
        return frozenset((t.index,))
    return _cached(t, "_vars", _term_vars)


def is_closed_term(t: Term) -> bool:
    return not term_vars(t)


def _free_vars(f) -> set:
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Bottom):
        return set()
    if isinstance(f, (Implies, And, Or)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    if isinstance(f, DefPred):
        out = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    raise TypeError(f"not a term or formula: {f!r}")


def free_vars(f) -> frozenset:
    """Free variable indices of a term or formula."""
    if isinstance(f, TERM_TYPES):
        return term_vars(f)
    return _cached(f, "_free", _free_vars)


def _all_vars(f) -> set:
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Bottom):
        return set()
    if isinstance(f, (Implies, And, Or)):
        return all_vars(f.left) | all_vars(f.right)
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, (Forall, Exists)):
        return all_vars(f.body) | {f.var}
    if isinstance(f, DefPred):
        out = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    raise TypeError(f"not a term or formula: {f!r}")


def all_vars(f) -> frozenset:
    """Every variable index occurring in f, free or bound."""
    if isinstance(f, TERM_TYPES):
        return term_vars(f)
    return _cached(f, "_all", _all_vars)


def fresh_var(*things, above: int = -1) -> int:
    """Smallest index greater than ``above`` and every variable in ``things``."""
    m = above
    for x in things:
        vs = all_vars(x)
        if vs:
            m = max(m, max(vs))
    return m + 1


def is_pure(f: Formula) -> bool:
    if isinstance(f, DefPred):
        return False
    if isinstance(f, (Eq, Bottom)):
        return True
    if isinstance(f, (Implies, And, Or)):
        return is_pure(f.left) and is_pure(f.right)
    if isinstance(f, (Not, Forall, Exists)):
        return is_pure(f.body)
    raise TypeError(f"not a formula: {f!r}")


def size(x) -> int:
    """Number of abstract-syntax nodes (a Var or NumLit counts as one)."""
    if isinstance(x, (Zero, Var, NumLit, Bottom)):
        return 1
    if isinstance(x, Succ):
        return 1 + size(x.arg)
    if isinstance(x, (Add, Mul, Eq, Implies, And, Or)):
        return 1 + size(x.left) + size(x.right)
    if isinstance(x, Not):
        return 1 + size(x.body)
    if isinstance(x, (Forall, Exists)):
        return 2 + size(x.body)
    if isinstance(x, DefPred):
        return 1 + sum(size(a) for a in x.args)
    if isinstance(x, ProofTree):
        return 1 + size(x.conclusion) + sum(size(p) for p in x.premises)
    if isinstance(x, (Proj, Z, SuccFn, AddFn, MulFn, ChiLeq)):
        return 1
    if isinstance(x, Comp):
        return 1 + size(x.h) + sum(size(g) for g in x.gs)
    if isinstance(x, Mu):
        return 1 + size(x.g)
    if isinstance(x, Rec):
        return 1 + size(x.base) + size(x.step)
    raise TypeError(f"not syntax: {x!r}")


# ---------------------------------------------------------------------------
# Substitution
# ---------------------------------------------------------------------------

def replace_in_term(t: Term, mapping: dict) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.index, t)
    if isinstance(t, Succ):
        return Succ(replace_in_term(t.arg, mapping))
    if isinstance(t, Add):
        return Add(replace_in_term(t.left, mapping), replace_in_term(t.right, mapping))
    if isinstance(t, Mul):
        return Mul(replace_in_term(t.left, mapping), replace_in_term(t.right, mapping))
    return t


def replace_free(f: Formula, mapping: dict) -> Formula:
    """Simultaneously replace free variables by terms.

    Raises ValueError if a replacement term would be captured by a binder.
    """
    if not mapping:
        return f
    if isinstance(f, Eq):
        return Eq(replace_in_term(f.left, mapping), replace_in_term(f.right, mapping))
    if isinstance(f, Bottom):
        return f
    if isinstance(f, (Implies, And, Or)):
        return type(f)(replace_free(f.left, mapping), replace_free(f.right, mapping))
    if isinstance(f, Not):
        return Not(replace_free(f.body, mapping))
    if isinstance(f, (Forall, Exists)):
        inner = {v: t for v, t in mapping.items() if v != f.var}
        if not inner:
            return f
        body_free = free_vars(f.body)
        for v, t in inner.items():
            if v in body_free and f.var in term_vars(t):
                raise ValueError(f"substitution for x{v} captured by binder x{f.var}")
        return type(f)(f.var, replace_free(f.body, inner))
    if isinstance(f, DefPred):
        return DefPred(f.name, tuple(replace_in_term(a, mapping) for a in f.args))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, v: int, t: Term) -> Formula:
    """Replace the free occurrences of variable ``v`` in ``f`` by the closed term ``t``."""
    if not is_closed_term(t):
        raise ValueError("substitute only accepts closed terms")
    return replace_free(f, {v: t})


def numeral(n: int) -> NumLit:
    if n < 0:
        raise ValueError("numerals denote natural numbers")
    return NumLit(n)


def succ_chain(n: int, base: Term = Zero()) -> Term:
    t = base
    for _ in range(n):
        t = Succ(t)
    return t


def expand_numeral(x, cap: int):
    """Unfold every ``NumLit(n)`` with ``n <= cap`` into ``S^n(0)``.

    Returns ``(result, left)`` where ``left`` tells whether some literal was
    too large and stayed in place.
    """
    left = False

    def term(t):
        nonlocal left
        if isinstance(t, NumLit):
            if t.value <= cap:
                return succ_chain(t.value)
            left = True
            return t
        if isinstance(t, Succ):
            return Succ(term(t.arg))
        if isinstance(t, (Add, Mul)):
            return type(t)(term(t.left), term(t.right))
        return t

    def formula(f):
        if isinstance(f, Eq):
            return Eq(term(f.left), term(f.right))
        if isinstance(f, (Implies, And, Or)):
            return type(f)(formula(f.left), formula(f.right))
        if isinstance(f, Not):
            return Not(formula(f.body))
        if isinstance(f, (Forall, Exists)):
            return type(f)(f.var, formula(f.body))
        if isinstance(f, DefPred):
            return DefPred(f.name, tuple(term(a) for a in f.args))
        return f

    out = term(x) if isinstance(x, TERM_TYPES) else formula(x)
    return out, left


# Derived notation used throughout: x <= y is exists z (z + x = y), x < y is S(x) <= y.

def le(x: Term, y: Term, witness: Optional[int] = None) -> Exists:
    if witness is None:
        witness = fresh_var(Eq(x, y))
    return Exists(witness, Eq(Add(Var(witness), x), y))


def lt(x: Term, y: Term, witness: Optional[int] = None) -> Exists:
    return le(Succ(x), y, witness)


def iff(a: Formula, b: Formula) -> And:
    return And(Implies(a, b), Implies(b, a))


TOP = Not(Bottom())


# ---------------------------------------------------------------------------
# Articulated trees
# ---------------------------------------------------------------------------

class ArticulatedTree:
    """A finite tree labelled by alphabet codes.

    Equality and hashing are iterative because digit chains of large
    numerals can be thousands of nodes deep.
    """

    __slots__ = ("label", "children", "_hash")

    def __init__(self, label: int, children=()):
        self.label = label
        self.children = tuple(children)
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, ArticulatedTree):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a.label != b.label or len(a.children) != len(b.children):
                return False
            stack.extend(zip(a.children, b.children))
        return True

    def __hash__(self):
        if self._hash is None:
            order = []
            stack = [self]
            while stack:
                node = stack.pop()
                if node._hash is None:
                    order.append(node)
                    stack.extend(node.children)
            for node in reversed(order):
                node._hash = hash((node.label, tuple(c._hash for c in node.children)))
        return self._hash

    def __repr__(self):
        name = ALPHABET[self.label] if 0 <= self.label < len(ALPHABET) else self.label
        if not self.children:
            return f"<{name}>"
        return f"<{name} {' '.join(map(repr, self.children))}>"

    def node_count(self) -> int:
        n = 0
        stack = [self]
        while stack:
            node = stack.pop()
            n += 1
            stack.extend(node.children)
        return n


def leaf(name: str) -> ArticulatedTree:
    return ArticulatedTree(CODE[name])


def digits_tree(n: int) -> ArticulatedTree:
    """Little-endian binary digit chain: bit_{n mod 2}(digits(n // 2)), ending in bitend."""
    if n < 0:
        raise ValueError("negative number")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    node = leaf("bitend")
    for b in reversed(bits):
        node = ArticulatedTree(CODE["bit1"] if b else CODE["bit0"], (node,))
    return node


class ArticulationError(ValueError):
    """An articulated tree that is not the image of any syntax object."""


def digits_value(tree: ArticulatedTree) -> int:
    value, shift = 0, 0
    node = tree
    bit0, bit1, end = CODE["bit0"], CODE["bit1"], CODE["bitend"]
    while node.label != end:
        if node.label not in (bit0, bit1) or len(node.children) != 1:
            raise ArticulationError("malformed digit chain")
        if node.label == bit1:
            value |= 1 << shift
        shift += 1
        node = node.children[0]
    if node.children:
        raise ArticulationError("bitend must be a leaf")
    if shift and tree_top_bit_is_zero(tree, shift):
        raise ArticulationError("digit chain has a leading zero")
    return value


def tree_top_bit_is_zero(tree: ArticulatedTree, length: int) -> bool:
    node = tree
    for _ in range(length - 1):
        node = node.children[0]
    return node.label == CODE["bit0"]


def _node(name: str, *children) -> ArticulatedTree:
    return ArticulatedTree(CODE[name], children)


def _term_tree(t: Term) -> ArticulatedTree:
    if isinstance(t, Zero):
        return leaf("0")
    if isinstance(t, Succ):
        # successor chains can be long (expanded numerals); unwind them in a loop
        depth = 0
        while isinstance(t, Succ):
            depth += 1
            t = t.arg
        node = _term_tree(t)
        for _ in range(depth):
            node = ArticulatedTree(CODE["S"], (node,))
        return node
    if isinstance(t, Add):
        return _node("+", _term_tree(t.left), _term_tree(t.right))
    if isinstance(t, Mul):
        return _node("*", _term_tree(t.left), _term_tree(t.right))
    if isinstance(t, Var):
        return _node("var", digits_tree(t.index))
    if isinstance(t, NumLit):
        return _node("lit", digits_tree(t.value))
    raise TypeError(f"not a term: {t!r}")


def _formula_tree(f: Formula) -> ArticulatedTree:
    if isinstance(f, Eq):
        return _node("=", _term_tree(f.left), _term_tree(f.right))
    if isinstance(f, Bottom):
        return leaf("bot")
    if isinstance(f, (Implies, And, Or)):
        return _node(BINARY_CONNECTIVES[type(f)], _formula_tree(f.left), _formula_tree(f.right))
    if isinstance(f, Not):
        return _node("not", _formula_tree(f.body))
    if isinstance(f, (Forall, Exists)):
        return _node(QUANTIFIERS[type(f)], _term_tree(Var(f.var)), _formula_tree(f.body))
    if isinstance(f, DefPred):
        return _node("defpred", leaf(f.name), *(_term_tree(a) for a in f.args))
    raise TypeError(f"not a formula: {f!r}")


def _proof_tree(p: ProofTree) -> ArticulatedTree:
    return ArticulatedTree(
        CODE[p.rule], (_formula_tree(p.conclusion), *(_proof_tree(q) for q in p.premises))
    )


def _program_tree(p: Program) -> ArticulatedTree:
    if isinstance(p, Proj):
        return _node("proj", digits_tree(p.n), digits_tree(p.i))
    if isinstance(p, Z):
        return _node("z", digits_tree(p.n))
    if isinstance(p, SuccFn):
        return leaf("succ")
    if isinstance(p, AddFn):
        return leaf("add")
    if isinstance(p, MulFn):
        return leaf("mul")
    if isinstance(p, ChiLeq):
        return leaf("chileq")
    if isinstance(p, Comp):
        return _node("comp", digits_tree(p.n), digits_tree(p.m), _program_tree(p.h),
                     *(_program_tree(g) for g in p.gs))
    if isinstance(p, Mu):
        return _node("mu", digits_tree(p.n), _program_tree(p.g))
    if isinstance(p, Rec):
        return _node("rec", digits_tree(p.n), _program_tree(p.base), _program_tree(p.step))
    raise TypeError(f"not a program: {p!r}")


CATEGORIES = ("term", "formula", "proof", "program")


def category_of(x) -> str:
    if isinstance(x, TERM_TYPES):
        return "term"
    if isinstance(x, FORMULA_TYPES):
        return "formula"
    if isinstance(x, ProofTree):
        return "proof"
    if isinstance(x, PROGRAM_TYPES):
        return "program"
    raise TypeError(f"not syntax: {x!r}")


def to_articulated(x) -> ArticulatedTree:
    cat = category_of(x)
    if cat == "term":
        return _term_tree(x)
    if cat == "formula":
        return _formula_tree(x)
    if cat == "proof":
        return _proof_tree(x)
    return _program_tree(x)


def _arity(tree: ArticulatedTree, k: int, what: str):
    if len(tree.children) != k:
        raise ArticulationError(f"{what} expects {k} children, got {len(tree.children)}")


def _term_from(tree: ArticulatedTree) -> Term:
    name = ALPHABET[tree.label] if tree.label < len(ALPHABET) else None
    if name == "0":
        _arity(tree, 0, "0")
        return Zero()
    if name == "S":
        depth = 0
        while tree.label == CODE["S"]:
            _arity(tree, 1, "S")
            depth += 1
            tree = tree.children[0]
        return succ_chain(depth, _term_from(tree))
    if name in ("+", "*"):
        _arity(tree, 2, name)
        cls = Add if name == "+" else Mul
        return cls(_term_from(tree.children[0]), _term_from(tree.children[1]))
    if name == "var":
        _arity(tree, 1, "var")
        return Var(digits_value(tree.children[0]))
    if name == "lit":
        _arity(tree, 1, "lit")
        return NumLit(digits_value(tree.children[0]))
    raise ArticulationError(f"label {name!r} is not a term constructor")


_CONNECTIVE_CLASSES = {v: k for k, v in BINARY_CONNECTIVES.items()}
_QUANTIFIER_CLASSES = {v: k for k, v in QUANTIFIERS.items()}


def _formula_from(tree: ArticulatedTree) -> Formula:
    name = ALPHABET[tree.label] if tree.label < len(ALPHABET) else None
    if name == "=":
        _arity(tree, 2, "=")
        return Eq(_term_from(tree.children[0]), _term_from(tree.children[1]))
    if name == "bot":
        _arity(tree, 0, "bot")
        return Bottom()
    if name in _CONNECTIVE_CLASSES:
        _arity(tree, 2, name)
        return _CONNECTIVE_CLASSES[name](_formula_from(tree.children[0]),
                                         _formula_from(tree.children[1]))
    if name == "not":
        _arity(tree, 1, "not")
        return Not(_formula_from(tree.children[0]))
    if name in _QUANTIFIER_CLASSES:
        _arity(tree, 2, name)
        v = _term_from(tree.children[0])
        if not isinstance(v, Var):
            raise ArticulationError("quantifier must bind a variable")
        return _QUANTIFIER_CLASSES[name](v.index, _formula_from(tree.children[1]))
    if name == "defpred":
        if not tree.children:
            raise ArticulationError("defpred needs a predicate symbol")
        head = tree.children[0]
        pname = ALPHABET[head.label] if head.label < len(ALPHABET) else None
        if pname not in PREDICATES or head.children:
            raise ArticulationError("defpred head must be a predicate symbol leaf")
        return DefPred(pname, tuple(_term_from(c) for c in tree.children[1:]))
    raise ArticulationError(f"label {name!r} is not a formula constructor")


def _proof_from(tree: ArticulatedTree) -> ProofTree:
    name = ALPHABET[tree.label] if tree.label < len(ALPHABET) else None
    if name not in RULE_TAGS:
        raise ArticulationError(f"label {name!r} is not a rule tag")
    if not tree.children:
        raise ArticulationError("proof node needs a conclusion")
    return ProofTree(_formula_from(tree.children[0]), name,
                     tuple(_proof_from(c) for c in tree.children[1:]))


def _program_from(tree: ArticulatedTree) -> Program:
    name = ALPHABET[tree.label] if tree.label < len(ALPHABET) else None
    ch = tree.children
    if name == "proj":
        _arity(tree, 2, "proj")
        return Proj(digits_value(ch[0]), digits_value(ch[1]))
    if name == "z":
        _arity(tree, 1, "z")
        return Z(digits_value(ch[0]))
    simple = {"succ": SuccFn, "add": AddFn, "mul": MulFn, "chileq": ChiLeq}
    if name in simple:
        _arity(tree, 0, name)
        return simple[name]()
    if name == "comp":
        if len(ch) < 3:
            raise ArticulationError("comp needs n, m and h")
        n, m = digits_value(ch[0]), digits_value(ch[1])
        if len(ch) != 3 + m:
            raise ArticulationError("comp child count does not match m")
        return Comp(n, m, _program_from(ch[2]), tuple(_program_from(c) for c in ch[3:]))
    if name == "mu":
        _arity(tree, 2, "mu")
        return Mu(digits_value(ch[0]), _program_from(ch[1]))
    if name == "rec":
        _arity(tree, 3, "rec")
        return Rec(digits_value(ch[0]), _program_from(ch[1]), _program_from(ch[2]))
    raise ArticulationError(f"label {name!r} is not a program constructor")


def from_articulated(tree: ArticulatedTree, category: str):
    readers = {"term": _term_from, "formula": _formula_from,
               "proof": _proof_from, "program": _program_from}
    if category not in readers:
        raise ValueError(f"unknown category {category!r}")
    try:
        return readers[category](tree)
    except RecursionError:
        raise ArticulationError("tree too deep for this category") from None
