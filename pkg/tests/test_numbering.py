import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from godelkit.model import TriBool, evaluate
from godelkit.numbering import (
    THRESHOLD, DecodeError, cantor_pair, cantor_unpair, decode, decode_tree, encode,
    godel_number, pair, reflect, size_bound, unpair,
)
from godelkit.syntax import (
    ArticulatedTree, Eq, NumLit, Succ, Zero, numeral,
)

from gen import formulas_of_size, proofs_of_size, random_formula, terms_of_size, upto


def cantor_oracle(n, p):
    # counts the grid points enumerated before (n, p) diagonal by diagonal
    s = n + p
    return sum(range(s + 1)) + n + 1


def test_cantor_pair_examples():
    assert cantor_pair(0, 0) == 1
    assert cantor_pair(1, 0) == 3
    assert cantor_pair(0, 1) == 2
    assert cantor_pair(1, 3) == 12


def test_cantor_unpair_examples():
    assert cantor_unpair(1) == (0, 0)
    assert cantor_unpair(12) == (1, 3)


def test_cantor_matches_diagonal_count():
    for n, p in product(range(40), repeat=2):
        assert cantor_pair(n, p) == cantor_oracle(n, p)


def test_cantor_scan_10000():
    for c in range(1, 10001):
        assert cantor_pair(*cantor_unpair(c)) == c


def test_cantor_domain_errors():
    with pytest.raises(ValueError):
        cantor_unpair(0)
    with pytest.raises(ValueError):
        cantor_pair(-1, 0)


@given(st.integers(0, 2**300), st.integers(0, 2**300))
def test_hybrid_pair_round_trip(n, p):
    assert unpair(pair(n, p)) == (n, p)


@given(st.integers(0, 2**80), st.integers(0, 2**80), st.integers(1, 2**20))
def test_hybrid_pair_monotone_in_each_argument(n, p, d):
    assert pair(n, p) < pair(n + d, p)
    assert pair(n, p) < pair(n, p + d)


def test_hybrid_pair_is_cantor_below_threshold():
    for n, p in [(0, 0), (1, 3), (2**31, 2**31), (2**32 - 1, 2**32)]:
        if cantor_pair(n, p) < THRESHOLD:
            assert pair(n, p) == cantor_pair(n, p)


def test_hybrid_unpair_rejects_non_image():
    bad = 0
    for z in range(1, 5000):
        try:
            n, p = unpair(THRESHOLD + z)
        except DecodeError:
            bad += 1
            continue
        assert pair(n, p) == THRESHOLD + z
    assert bad > 0


def test_encode_small_trees():
    assert encode(ArticulatedTree(0)) == 1
    assert encode(ArticulatedTree(1, (ArticulatedTree(0),))) == cantor_pair(1, cantor_pair(1, 0)) == 12


def _trees(size, labels=(0, 1, 2)):
    if size == 1:
        return [ArticulatedTree(a) for a in labels]
    out = []
    for a in labels:
        # one child of size-1, or two children splitting size-1
        out += [ArticulatedTree(a, (t,)) for t in _trees(size - 1, labels)]
        for k in range(1, size - 1):
            out += [ArticulatedTree(a, (l, r)) for l in _trees(k, labels) for r in _trees(size - 1 - k, labels)]
    return out


def test_encode_injective_on_small_trees():
    codes = {}
    for s in range(1, 5):
        for t in _trees(s):
            c = encode(t)
            assert codes.setdefault(c, t) == t
            assert decode_tree(c) == t


def test_godel_numbers_of_zero_and_one():
    assert godel_number(Zero()) == 1
    assert godel_number(Succ(Zero())) == 12
    assert decode(12, "term") == Succ(Zero())


def test_decode_zero_fails():
    with pytest.raises(DecodeError):
        decode(0, "term")


def test_round_trip_exhaustive_size_5():
    for cat, gen in (("term", terms_of_size), ("formula", formulas_of_size), ("proof", proofs_of_size)):
        for x in upto(gen, 5):
            assert decode(godel_number(x), cat) == x


def test_joint_injectivity_with_category_tags():
    seen = {}
    for cat, gen in (("term", terms_of_size), ("formula", formulas_of_size), ("proof", proofs_of_size)):
        for x in upto(gen, 4):
            key = (cat, godel_number(x))
            assert seen.setdefault(key, x) == x


def test_decode_wrong_category():
    with pytest.raises(DecodeError):
        decode(godel_number(Eq(Zero(), Zero())), "term")


def test_reflect_definition():
    f = Eq(Zero(), Zero())
    assert reflect(f) == NumLit(godel_number(f))
    assert evaluate(Eq(reflect(f), numeral(godel_number(f)))) is TriBool.TRUE


def test_reflect_injective_on_sample():
    rng = random.Random(3)
    sample = {random_formula(rng, 15) for _ in range(300)}
    assert len({reflect(f) for f in sample}) == len(sample)


def test_size_bound_holds_on_random_formulas():
    rng = random.Random(11)
    for _ in range(300):
        f = random_formula(rng, 30)
        assert godel_number(f).bit_length() <= size_bound(f)


@pytest.mark.parametrize("k", [0, 1, 63, 64, 65, 1000, 20000])
def test_size_bound_on_large_literals(k):
    t = NumLit(2**k + 1)
    assert godel_number(t).bit_length() <= size_bound(t)
