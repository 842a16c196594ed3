"""Bitstring and balanced-word primitives.

Words are plain Python strings over the characters '0' and '1'.  Positions
are 1-based throughout the package: position 1 is the leftmost character.
This matches the flip sequences and the CLI delta output, which name
positions, never array indices.

A word of length 2n is *balanced* if it has n ones and n zeros.  Reading
'1' as +1 and '0' as -1, the running sum is the word's lattice path; a
balanced word is a Dyck word if the path never dips below zero, and a
near-Dyck word if exactly one prefix dips below zero (necessarily to -1).
"""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence

__all__ = [
    "WordClass",
    "weight",
    "flip",
    "rev_complement",
    "classify",
    "is_dyck_word",
    "is_near_dyck_word",
    "build_match_table",
    "decompose_dyck",
    "decompose_near_dyck",
    "dyck_words",
]

_ONE = ord("1")
_COMPLEMENT = str.maketrans("01", "10")


class WordClass(enum.Enum):
    """Prefix-balance classification of a word."""

    DYCK = "dyck"
    NEAR_DYCK = "near-dyck"
    OTHER = "other"


def weight(x: str) -> int:
    """Number of ones in the word."""
    return x.count("1")


def flip(x: str, p: int) -> str:
    """Return a copy of x with the bit at 1-based position p toggled."""
    if not 1 <= p <= len(x):
        raise ValueError("position out of bounds")
    i = p - 1
    return x[:i] + ("0" if x[i] == "1" else "1") + x[i + 1 :]


def rev_complement(x: str) -> str:
    """Reverse the word and complement every bit.  An involution that
    maps Dyck words to Dyck words and near-Dyck words to near-Dyck words."""
    return x.translate(_COMPLEMENT)[::-1]


def classify(x: str) -> WordClass:
    """Classify x as DYCK, NEAR_DYCK, or OTHER.

    The empty word counts as a Dyck word.  Unbalanced words, words of odd
    length, and words with two or more below-zero prefixes are OTHER.
    """
    height = 0
    dips = 0
    for c in x:
        if c == "1":
            height += 1
        else:
            height -= 1
            if height < 0:
                dips += 1
    if height != 0:
        return WordClass.OTHER
    if dips == 0:
        return WordClass.DYCK
    if dips == 1:
        return WordClass.NEAR_DYCK
    return WordClass.OTHER


def is_dyck_word(x: str) -> bool:
    return classify(x) is WordClass.DYCK


def is_near_dyck_word(x: str) -> bool:
    return classify(x) is WordClass.NEAR_DYCK


def build_match_table(x: str | bytes | bytearray) -> list[int]:
    """Pair every 1 of a Dyck word with the 0 that closes it.

    Returns a table of length len(x)+1 where table[p] is the 1-based
    position paired with position p; index 0 is an unused sentinel.  The
    table of a word is reused unchanged for all nested subranges, so the
    sequence emitters never rebuild it.
    """
    codes: bytes | bytearray = x.encode() if isinstance(x, str) else x
    match = [0] * (len(codes) + 1)
    stack: list[int] = []
    p = 0
    for c in codes:
        p += 1
        if c == _ONE:
            stack.append(p)
        else:
            if not stack:
                raise ValueError("unbalanced word")
            q = stack.pop()
            match[q] = p
            match[p] = q
    if stack:
        raise ValueError("unbalanced word")
    return match


def decompose_dyck(
    x: str, match: Sequence[int] | None = None
) -> tuple[str, str]:
    """Split a nonempty Dyck word as x = 1 u 0 v and return (u, v).

    u is the content of the first balanced run, v the remainder; both are
    Dyck words.  Pass a precomputed match table to skip rebuilding it.
    """
    if not x:
        raise ValueError("empty decomposition")
    if match is None:
        match = build_match_table(x)
    b = match[1]
    return x[1 : b - 1], x[b:]


def decompose_near_dyck(y: str) -> tuple[str, str]:
    """Split a near-Dyck word as y = u 0 1 v and return (u, v).

    The marked 0 is the unique step dipping below zero; u and v are Dyck
    words.
    """
    height = 0
    for i, c in enumerate(y):
        if c == "1":
            height += 1
        else:
            height -= 1
            if height < 0:
                u, v = y[:i], y[i + 2 :]
                if i + 1 < len(y) and y[i + 1] == "1" and is_dyck_word(v):
                    return u, v
                break
    raise ValueError("not a near-Dyck word")


def dyck_words(n: int) -> Iterator[str]:
    """Yield all Dyck words with n ones in lexicographic order.

    Enumeration is exponential in n; intended for desk-scale oracles and
    the verification suite, not for the generator itself.
    """
    if n < 0:
        raise ValueError("negative length")

    # '0' < '1', so a closing step is tried before an opening one
    def go(prefix: str, ones: int, height: int) -> Iterator[str]:
        if len(prefix) == 2 * n:
            yield prefix
            return
        if height > 0:
            yield from go(prefix + "0", ones, height - 1)
        if ones < n:
            yield from go(prefix + "1", ones + 1, height + 1)

    return go("", 0, 0)
