"""Cantor pairing and the universal numbering of articulated trees.

A tree ``f(t1, ..., tp)`` is numbered ``<f> ; (<t1> ; ( ... ; (<tp> ; 0)))``.
The pairing ``;`` used for trees is Cantor's ``n;p = (n+p)(n+p+1)/2 + n + 1``
as long as that value stays below ``THRESHOLD``.  Above it we switch to a
length-prefixed bit concatenation, because nested Cantor pairing doubles the
bit-length at every level and the codes of self-referential sentences would
not fit in memory.  Small codes (every code below 2**64) are exactly the
Cantor-list codes.
"""

from __future__ import annotations

from math import isqrt

from .syntax import (
    ArticulatedTree,
    ArticulationError,
    NumLit,
    category_of,
    from_articulated,
    to_articulated,
)

THRESHOLD = 1 << 64


class DecodeError(ValueError):
    """The natural number is not the code of an object of the requested category."""


def cantor_pair(n: int, p: int) -> int:
    if n < 0 or p < 0:
        raise ValueError("cantor_pair is defined on naturals")
    s = n + p
    return s * (s + 1) // 2 + n + 1


def cantor_unpair(c: int) -> tuple:
    if c < 1:
        raise ValueError("0 is not in the range of Cantor pairing")
    c -= 1
    # s is the largest integer with s(s+1)/2 <= c
    s = (isqrt(8 * c + 1) - 1) // 2
    n = c - s * (s + 1) // 2
    return n, s - n


def _pack(n: int, p: int) -> int:
    # layout, low bits first: 1 marker then b-1 zeros | m (b bits) | n (8k bits) | p
    # n occupies whole bytes so that small first components (rule tags, symbol
    # codes) all shift p by the same amount and the order follows p first.
    k = (n.bit_length() + 7) // 8
    m = k + 1
    b = m.bit_length()
    return (((((p << (8 * k)) | n) << b) | m) << b) | (1 << (b - 1))


def _unpack(z: int) -> tuple:
    if z <= 0:
        raise DecodeError("empty packed pair")
    b = (z & -z).bit_length()
    z >>= b
    m = z & ((1 << b) - 1)
    if m.bit_length() != b:
        raise DecodeError("non-canonical length field")
    k = m - 1
    z >>= b
    n = z & ((1 << (8 * k)) - 1)
    if k and n.bit_length() <= 8 * (k - 1):
        raise DecodeError("non-canonical packed pair")
    return n, z >> (8 * k)


def _small(n: int, p: int) -> bool:
    """Whether cantor_pair(n, p) < THRESHOLD, without squaring huge numbers."""
    if n.bit_length() > 33 or p.bit_length() > 33:
        return False
    return cantor_pair(n, p) < THRESHOLD


def pair(n: int, p: int) -> int:
    """The pairing used by the tree numbering (Cantor below THRESHOLD)."""
    if _small(n, p):
        return cantor_pair(n, p)
    return THRESHOLD + _pack(n, p)


def unpair(c: int) -> tuple:
    if c < 1:
        raise DecodeError("0 is not a pair code")
    if c < THRESHOLD:
        return cantor_unpair(c)
    n, p = _unpack(c - THRESHOLD)
    if _small(n, p):
        raise DecodeError("pair code outside the image of the numbering")
    return n, p


def encode(tree: ArticulatedTree) -> int:
    """Number an articulated tree; iterative so that deep digit chains are fine."""
    memo = {}
    stack = [(tree, False)]
    while stack:
        node, ready = stack.pop()
        if id(node) in memo:
            continue
        if not ready:
            stack.append((node, True))
            for child in node.children:
                if id(child) not in memo:
                    stack.append((child, False))
            continue
        rest = 0
        for child in reversed(node.children):
            rest = pair(memo[id(child)], rest)
        memo[id(node)] = pair(node.label, rest)
    return memo[id(tree)]


def decode_tree(c: int) -> ArticulatedTree:
    """Inverse of :func:`encode` on trees; raises DecodeError outside its image."""
    if c < 1:
        raise DecodeError("0 is not the code of a tree")
    # First pass: unfold codes into (label, child codes); second pass: build bottom-up.
    shapes = {}
    stack = [c]
    while stack:
        code = stack.pop()
        if code in shapes:
            continue
        if code < 1:
            raise DecodeError("0 is not the code of a tree")
        label, rest = unpair(code)
        kids = []
        while rest:
            head, rest = unpair(rest)
            kids.append(head)
        shapes[code] = (label, kids)
        stack.extend(k for k in kids if k not in shapes)
    built = {}
    order = [(c, False)]
    while order:
        code, ready = order.pop()
        if code in built:
            continue
        label, kids = shapes[code]
        if not ready:
            order.append((code, True))
            order.extend((k, False) for k in kids if k not in built)
            continue
        built[code] = ArticulatedTree(label, [built[k] for k in kids])
    return built[c]


def godel_number(x) -> int:
    return encode(to_articulated(x))


def decode(c: int, category: str):
    """The object of ``category`` whose Gödel number is ``c``.

    Most naturals are not codes; that raises DecodeError, which callers that
    scan ranges of numbers are expected to catch (or use :func:`try_decode`).
    """
    tree = decode_tree(c)
    try:
        return from_articulated(tree, category)
    except (ArticulationError, ValueError) as e:
        if isinstance(e, DecodeError):
            raise
        raise DecodeError(str(e)) from None


def try_decode(c: int, category: str):
    try:
        return decode(c, category)
    except DecodeError:
        return None


def reflect(x) -> NumLit:
    """The closed term naming the Gödel number of ``x``."""
    category_of(x)
    return NumLit(godel_number(x))


# Documented size bound: each articulated node costs two pairings, and a
# pairing above the threshold adds at most 2*log2(bits)+9 bits of overhead,
# so bit-length is at most SIZE_BOUND_FACTOR times the articulated node count
# for every object this library can hold in memory.
SIZE_BOUND_FACTOR = 128


def size_bound(x) -> int:
    return SIZE_BOUND_FACTOR * to_articulated(x).node_count()
