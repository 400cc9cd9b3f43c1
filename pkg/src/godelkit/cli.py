"""Command-line entry point: ``godelkit <subcommand> ...``.

Exit codes: 0 success / true / valid / found, 1 false / unknown / invalid /
not found, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import text
from .calculus import bounded_provable, machine_check, search_proof, theory_table
from .computability import FuelExhausted, MalformedProgram, run
from .diagonal import (
    KINDS, FixpointError, fixpoint, godel_sentence, henkin_sentence, loeb_sentence,
    oracle_table, rosser_sentence,
)
from .model import MissingOracle, ShapeError, TriBool, UnassignedVariable, evaluate
from .numbering import DecodeError, decode, godel_number
from .representation import RecNotAllowed, compile, to_halting_formula
from .syntax import Bottom

GRAMMAR = text.__doc__


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str, category: str | None):
    src = _read(path)
    try:
        return text.parse(src, category) if category else text.parse_any(src)
    except text.ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _nat(s: str) -> int:
    try:
        v = int(s, 0) if s.lower().startswith("0x") else int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {s!r}")
    return v


def _assignment(s: str) -> tuple:
    name, sep, value = s.partition("=")
    if not sep or not name.startswith("x") or not name[1:].isdigit():
        raise argparse.ArgumentTypeError(f"expected xN=VALUE, got {s!r}")
    return int(name[1:]), _nat(value)


def _code(n: int, as_hex: bool) -> str:
    return hex(n) if as_hex else str(n)


def _emit(out, line: str):
    out.write(line + "\n")


def cmd_encode(a, out) -> int:
    _emit(out, _code(godel_number(_load(a.file, a.category)), a.hex))
    return 0


def cmd_decode(a, out) -> int:
    try:
        x = decode(a.code, a.category)
    except DecodeError as e:
        print(f"not the code of a {a.category}: {e}", file=sys.stderr)
        return 1
    _emit(out, text.show(x))
    return 0


def cmd_run(a, out) -> int:
    r = run(_load(a.file, "program"), a.args, fuel=a.fuel)
    if r is FuelExhausted:
        _emit(out, "fuel exhausted")
        return 1
    _emit(out, str(r.value))
    return 0


def cmd_compile(a, out) -> int:
    try:
        rep = compile(_load(a.file, "program"))
    except RecNotAllowed as e:
        raise UsageError(str(e)) from None
    _emit(out, text.show(rep.formula))
    return 0


def cmd_halting(a, out) -> int:
    try:
        f = to_halting_formula(_load(a.file, "program"), a.args)
    except (RecNotAllowed, ValueError) as e:
        raise UsageError(str(e)) from None
    _emit(out, text.show(f))
    return 0


def cmd_eval(a, out) -> int:
    f = _load(a.file, "formula")
    r = evaluate(f, dict(a.set), cap=a.cap, oracles=oracle_table(a.theory))
    _emit(out, r.name.lower())
    return 0 if r is TriBool.TRUE else 1


def cmd_check(a, out) -> int:
    ok = machine_check(_load(a.file, "proof"), theory_table(a.theory))
    _emit(out, "valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_search(a, out) -> int:
    found = search_proof(_load(a.file, "formula"), a.fuel, theory_table(a.theory), bound=a.bound)
    if found is None:
        _emit(out, "not found")
        return 1
    _emit(out, f"found {_code(found.code, a.hex)}")
    _emit(out, text.show(found.proof))
    return 0


def cmd_bounded(a, out) -> int:
    bit = bounded_provable(_load(a.file, "formula"), a.bound, theory_table(a.theory))
    _emit(out, str(bit))
    return 0 if bit else 1


def cmd_fixpoint(a, out) -> int:
    if a.kind == "custom":
        if a.c is None:
            raise UsageError("--kind custom needs --c FILE")
        r = fixpoint(_load(a.c, "formula"))
    elif a.kind == "loeb":
        r = loeb_sentence(_load(a.p, "formula") if a.p else Bottom())
    else:
        r = {"godel": godel_sentence, "henkin": henkin_sentence,
             "rosser": rosser_sentence}[a.kind]()
    for label, x in (("C", r.C), ("D", r.D), ("E", r.E), ("G", r.G)):
        _emit(out, f"{label}: {text.show(x)}")
    _emit(out, f"code E: {_code(r.e_code, a.hex)}")
    _emit(out, f"code G: {_code(r.g_code, a.hex)}")
    ok = r.identity_holds and r.G == text.parse(text.show(r.G), "formula")
    _emit(out, f"diagonal identity: {'OK' if ok else 'FAILED'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="godelkit",
        description="Gödel numbering, program compilation, proof checking and fixed points.",
        epilog="File formats:\n" + GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *, file=True, theory=False, fuel=None, hex_=False):
        p = sub.add_parser(name, help=help_, epilog="File formats:\n" + GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        if file:
            p.add_argument("file", help="input file, or - for stdin")
        if theory:
            p.add_argument("--theory", choices=("q", "pa"), default="pa",
                           help="q drops the induction schema (default: pa)")
        if fuel is not None:
            p.add_argument("--fuel", type=_nat, default=fuel, help=f"step budget (default: {fuel})")
        if hex_:
            p.add_argument("--hex", action="store_true", help="print codes in hexadecimal")
        p.set_defaults(fn=fn)
        return p

    p = add("encode", cmd_encode, "print the Gödel number of a term, formula, program or proof",
            hex_=True)
    p.add_argument("--category", choices=("term", "formula", "program", "proof"))

    p = add("decode", cmd_decode, "print the object with a given Gödel number", file=False)
    p.add_argument("code", type=_nat, help="decimal code (or 0x... hexadecimal)")
    p.add_argument("--category", choices=("term", "formula", "program", "proof"),
                   default="formula")

    p = add("run", cmd_run, "run a program on natural-number arguments", fuel=10**5)
    p.add_argument("args", type=_nat, nargs="*")

    add("compile", cmd_compile, "print the formula compiled from a Rec-free program")

    p = add("halting-formula", cmd_halting, "print exists y A[args, y] for a Rec-free program")
    p.add_argument("args", type=_nat, nargs="*")

    p = add("eval", cmd_eval, "evaluate a formula in the standard model", theory=True)
    p.add_argument("--cap", type=_nat, default=1000,
                   help="scan limit for unbounded quantifiers (default: 1000)")
    p.add_argument("--set", type=_assignment, action="append", default=[],
                   metavar="xN=VALUE", help="assign a free variable (repeatable)")

    add("check", cmd_check, "check a proof file", theory=True)

    p = add("search", cmd_search, "search for the least proof code of a formula",
            theory=True, fuel=10**5, hex_=True)
    p.add_argument("--bound", type=_nat, help="only consider codes up to this bound")

    p = add("bounded-provable", cmd_bounded, "1 iff some code <= N proves the formula",
            theory=True)
    p.add_argument("--bound", type=_nat, required=True)

    p = add("fixpoint", cmd_fixpoint, "build a self-referential sentence", file=False, hex_=True)
    p.add_argument("--kind", choices=KINDS, default="godel")
    p.add_argument("--c", help="formula file with free variable x0 (kind custom)")
    p.add_argument("--p", help="closed formula file for the Löb conclusion (default: bot)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return a.fn(a, sys.stdout)
    except (UsageError, FixpointError, MalformedProgram, UnassignedVariable, MissingOracle,
            ShapeError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"godelkit {a.command}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
