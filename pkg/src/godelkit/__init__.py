"""Executable constructions behind the incompleteness theorems."""

from .calculus import (
    PA, Q, bew_formula, box, bounded_provable, check_direct, decide_both, machine_check,
    machine_steps, necessitation_check, proof_predicate, search_proof,
)
from .computability import FuelExhausted, Value, beta, beta_encode, eliminate_rec, run
from .diagonal import (
    equiv_unfold, fixpoint, godel_sentence, henkin_sentence, loeb_sentence, neg_on_codes,
    oracle_table, rosser_sentence, sub_on_codes,
)
from .model import TriBool, evaluate, expand_bounded
from .numbering import cantor_pair, cantor_unpair, decode, encode, godel_number, pair, reflect, unpair
from .representation import compile, strong_rep_bounded, strong_rep_formula, to_halting_formula
from .text import parse, show

__all__ = [
    "PA", "Q", "bew_formula", "box", "bounded_provable", "check_direct", "decide_both",
    "machine_check", "machine_steps", "necessitation_check", "proof_predicate", "search_proof",
    "FuelExhausted", "Value", "beta", "beta_encode", "eliminate_rec", "run",
    "equiv_unfold", "fixpoint", "godel_sentence", "henkin_sentence", "loeb_sentence",
    "neg_on_codes", "oracle_table", "rosser_sentence", "sub_on_codes",
    "TriBool", "evaluate", "expand_bounded",
    "cantor_pair", "cantor_unpair", "decode", "encode", "godel_number", "pair", "reflect", "unpair",
    "compile", "strong_rep_bounded", "strong_rep_formula", "to_halting_formula",
    "parse", "show",
]
