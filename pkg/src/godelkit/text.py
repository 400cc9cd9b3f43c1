"""Fully parenthesized prefix syntax for terms, formulas, programs and proofs.

    term    ::= 0 | xN | (S term) | (+ term term) | (* term term) | (lit N)
    formula ::= bot | (= term term) | (=> f f) | (and f f) | (or f f) | (not f)
              | (forall xN f) | (exists xN f) | (Proof term*) | (Sub term*) | (Neg term*)
    program ::= succ | add | mul | chileq | (proj N N) | (z N)
              | (comp N M program (program*)) | (mu N program) | (rec N program program)
    proof   ::= (node formula TAG (proof*))

Text after ``;`` on a line is a comment.
"""

from __future__ import annotations

import re
import sys

from .syntax import (
    PREDICATES, RULE_TAGS, Add, AddFn, And, Bottom, ChiLeq, Comp, DefPred, Eq, Exists,
    Forall, Implies, Mu, Mul, MulFn, Not, NumLit, Or, ProofTree, Proj, Rec, Succ, SuccFn,
    Var, Z, Zero, category_of,
)


# Codes of self-referential sentences have tens of thousands of digits; the
# textual formats are decimal, so the interpreter's conversion limit is lifted.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_VAR = re.compile(r"x(0|[1-9][0-9]*)$")
_NAT = re.compile(r"(0|[1-9][0-9]*)$")


def read_sexpr(text: str):
    text = "\n".join(line.split(";", 1)[0] for line in text.splitlines())
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseError("empty input")
    stack = [[]]
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if len(stack) != 1:
        raise ParseError("missing ')'")
    if len(stack[0]) != 1:
        raise ParseError("expected exactly one expression")
    return stack[0][0]


def _nat(tok) -> int:
    if not isinstance(tok, str) or not _NAT.match(tok):
        raise ParseError(f"expected a natural number, got {_show(tok)}")
    return int(tok)


def _var(tok) -> int:
    if not isinstance(tok, str) or not _VAR.match(tok):
        raise ParseError(f"expected a variable xN, got {_show(tok)}")
    return int(tok[1:])


def _show(x) -> str:
    if isinstance(x, str):
        return repr(x)
    return "(" + " ".join(_show(y) if isinstance(y, list) else y for y in x) + ")"


def _expect(x, head: str, n: int):
    if len(x) != n + 1:
        raise ParseError(f"'{head}' takes {n} argument(s): {_show(x)}")


def term_from_sexpr(x):
    if isinstance(x, str):
        if x == "0":
            return Zero()
        return Var(_var(x))
    if not x:
        raise ParseError("empty list is not a term")
    head = x[0]
    if head == "S":
        _expect(x, "S", 1)
        depth = 0
        while isinstance(x, list) and x and x[0] == "S":
            _expect(x, "S", 1)
            depth += 1
            x = x[1]
        t = term_from_sexpr(x)
        for _ in range(depth):
            t = Succ(t)
        return t
    if head in ("+", "*"):
        _expect(x, head, 2)
        cls = Add if head == "+" else Mul
        return cls(term_from_sexpr(x[1]), term_from_sexpr(x[2]))
    if head == "lit":
        _expect(x, "lit", 1)
        return NumLit(_nat(x[1]))
    raise ParseError(f"not a term: {_show(x)}")


_BIN = {"=>": Implies, "and": And, "or": Or}
_QUANT = {"forall": Forall, "exists": Exists}


def formula_from_sexpr(x):
    if x == "bot":
        return Bottom()
    if isinstance(x, str) or not x:
        raise ParseError(f"not a formula: {_show(x)}")
    head = x[0]
    if head == "=":
        _expect(x, "=", 2)
        return Eq(term_from_sexpr(x[1]), term_from_sexpr(x[2]))
    if head in _BIN:
        _expect(x, head, 2)
        return _BIN[head](formula_from_sexpr(x[1]), formula_from_sexpr(x[2]))
    if head == "not":
        _expect(x, "not", 1)
        return Not(formula_from_sexpr(x[1]))
    if head in _QUANT:
        _expect(x, head, 2)
        return _QUANT[head](_var(x[1]), formula_from_sexpr(x[2]))
    if head in PREDICATES:
        return DefPred(head, tuple(term_from_sexpr(a) for a in x[1:]))
    raise ParseError(f"not a formula: {_show(x)}")


_SIMPLE_PROGRAMS = {"succ": SuccFn, "add": AddFn, "mul": MulFn, "chileq": ChiLeq}


def program_from_sexpr(x):
    if isinstance(x, str):
        if x in _SIMPLE_PROGRAMS:
            return _SIMPLE_PROGRAMS[x]()
        raise ParseError(f"not a program: {_show(x)}")
    if not x:
        raise ParseError("empty list is not a program")
    head = x[0]
    if head == "proj":
        _expect(x, "proj", 2)
        return Proj(_nat(x[1]), _nat(x[2]))
    if head == "z":
        _expect(x, "z", 1)
        return Z(_nat(x[1]))
    if head == "comp":
        _expect(x, "comp", 4)
        if not isinstance(x[4], list):
            raise ParseError("comp expects a parenthesized list of inner programs")
        return Comp(_nat(x[1]), _nat(x[2]), program_from_sexpr(x[3]),
                    tuple(program_from_sexpr(g) for g in x[4]))
    if head == "mu":
        _expect(x, "mu", 2)
        return Mu(_nat(x[1]), program_from_sexpr(x[2]))
    if head == "rec":
        _expect(x, "rec", 3)
        return Rec(_nat(x[1]), program_from_sexpr(x[2]), program_from_sexpr(x[3]))
    raise ParseError(f"not a program: {_show(x)}")


def proof_from_sexpr(x):
    if isinstance(x, str) or not x or x[0] != "node":
        raise ParseError(f"not a proof node: {_show(x)}")
    _expect(x, "node", 3)
    tag = x[2]
    if tag not in RULE_TAGS:
        raise ParseError(f"unknown rule tag {_show(tag)}")
    if not isinstance(x[3], list):
        raise ParseError("node expects a parenthesized list of subproofs")
    return ProofTree(formula_from_sexpr(x[1]), tag, tuple(proof_from_sexpr(p) for p in x[3]))


_READERS = {
    "term": term_from_sexpr,
    "formula": formula_from_sexpr,
    "program": program_from_sexpr,
    "proof": proof_from_sexpr,
}


def parse(text: str, category: str):
    if category not in _READERS:
        raise ValueError(f"unknown category {category!r}")
    try:
        return _READERS[category](read_sexpr(text))
    except RecursionError:
        raise ParseError("input nested too deeply") from None


def parse_any(text: str):
    """Parse with the first category that accepts the text: formula, term, program, proof."""
    x = read_sexpr(text)
    for cat in ("formula", "term", "program", "proof"):
        try:
            return _READERS[cat](x)
        except ParseError:
            continue
    raise ParseError("input is not a term, formula, program or proof")


def _term_str(t) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, NumLit):
        return f"(lit {t.value})"
    if isinstance(t, Succ):
        depth = 0
        while isinstance(t, Succ):
            depth += 1
            t = t.arg
        return "(S " * depth + _term_str(t) + ")" * depth
    if isinstance(t, Add):
        return f"(+ {_term_str(t.left)} {_term_str(t.right)})"
    if isinstance(t, Mul):
        return f"(* {_term_str(t.left)} {_term_str(t.right)})"
    raise TypeError(f"not a term: {t!r}")


_BIN_NAMES = {Implies: "=>", And: "and", Or: "or"}


def _formula_str(f) -> str:
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Eq):
        return f"(= {_term_str(f.left)} {_term_str(f.right)})"
    if isinstance(f, (Implies, And, Or)):
        return f"({_BIN_NAMES[type(f)]} {_formula_str(f.left)} {_formula_str(f.right)})"
    if isinstance(f, Not):
        return f"(not {_formula_str(f.body)})"
    if isinstance(f, Forall):
        return f"(forall x{f.var} {_formula_str(f.body)})"
    if isinstance(f, Exists):
        return f"(exists x{f.var} {_formula_str(f.body)})"
    if isinstance(f, DefPred):
        return "(" + " ".join([f.name, *(_term_str(a) for a in f.args)]) + ")"
    raise TypeError(f"not a formula: {f!r}")


def _program_str(p) -> str:
    for name, cls in _SIMPLE_PROGRAMS.items():
        if isinstance(p, cls):
            return name
    if isinstance(p, Proj):
        return f"(proj {p.n} {p.i})"
    if isinstance(p, Z):
        return f"(z {p.n})"
    if isinstance(p, Comp):
        inner = " ".join(_program_str(g) for g in p.gs)
        return f"(comp {p.n} {p.m} {_program_str(p.h)} ({inner}))"
    if isinstance(p, Mu):
        return f"(mu {p.n} {_program_str(p.g)})"
    if isinstance(p, Rec):
        return f"(rec {p.n} {_program_str(p.base)} {_program_str(p.step)})"
    raise TypeError(f"not a program: {p!r}")


def _proof_str(p) -> str:
    subs = " ".join(_proof_str(q) for q in p.premises)
    return f"(node {_formula_str(p.conclusion)} {p.rule} ({subs}))"


def show(x) -> str:
    """Print any syntax object in the prefix format; ``parse`` reads it back."""
    cat = category_of(x)
    return {"term": _term_str, "formula": _formula_str,
            "program": _program_str, "proof": _proof_str}[cat](x)
