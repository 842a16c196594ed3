"""Flip sequences: the per-path bit-flip rules of the generator.

A flip sequence is a list of 1-based positions.  Applying its entries one
after another to a Dyck word x of length 2n walks a path through the
weight-n and weight-(n+1) words; the weights alternate, every interior
word is visited exactly once across all paths, and the path ends at the
near-Dyck word u01v where x = 1u0v.

`flip_sequence` is the basic rule.  A source word x = 110w0v and its
partner y = 101w0v additionally admit modified rules
(`pair_source_sequence` for x, `pair_target_sequence` for y) whose two
paths cover the same vertices but with the endpoints exchanged.  That
exchange is the splice the full generator uses to join cycles.
"""

from __future__ import annotations

from collections.abc import Sequence

from .bitwords import build_match_table, decompose_dyck

__all__ = [
    "flip_sequence",
    "pair_source_sequence",
    "pair_target_sequence",
    "apply_flips",
    "last_vertex",
]


def _emit_nested(
    match: Sequence[int], lo: int, hi: int, out: list[int]
) -> None:
    """Append the flip positions for the balanced range [lo, hi].

    Iterative with an explicit work stack: the nesting depth of the input
    is unbounded, and the generator feeds words far deeper than the
    interpreter's recursion limit.  A frame (a, hi, resumed) covers the
    run starting at position a; it is revisited once its inner content
    has been emitted.
    """
    if lo > hi:
        return
    stack = [(lo, hi, False)]
    append = out.append
    push = stack.append
    while stack:
        a, h, resumed = stack.pop()
        b = match[a]
        if not resumed:
            append(b)
            append(a)
            push((a, h, True))
            if a + 1 <= b - 1:
                push((a + 1, b - 1, False))
        else:
            append(a - 1)
            append(b)
            if b + 1 <= h:
                push((b + 1, h, False))


def flip_sequence(
    x: str, match: Sequence[int] | None = None
) -> list[int]:
    """Flip positions walking the path that starts at Dyck word x.

    The sequence has length 2|u|+2 for x = 1u0v and never touches the
    suffix v.  Raises on empty or unbalanced input.
    """
    if not x:
        raise ValueError("empty word")
    if match is None:
        match = build_match_table(x)
    out = [match[1], 1]
    _emit_nested(match, 2, match[1] - 1, out)
    return out


def pair_source_sequence(x: str) -> list[int]:
    """Modified flip positions for the source x = 110w0v of a pair.

    The modified path keeps x as its first vertex but ends where the
    partner's basic path would have ended.
    """
    if x[:3] != "110":
        raise ValueError("not in tau domain")
    return [3, 1]


def pair_target_sequence(
    y: str, match: Sequence[int] | None = None
) -> list[int]:
    """Modified flip positions for the target y = 101w0v of a pair.

    Mirrors the source rule: the walk from y covers the vertices the
    source's basic path would have covered, ending at its endpoint.
    """
    if y[:3] != "101":
        raise ValueError("not in tau image")
    if match is None:
        match = build_match_table(y)
    b = match[3]
    out = [b, 1, 2, 3, 1, 2]
    _emit_nested(match, 4, b - 1, out)
    return out


def apply_flips(x: str, seq: Sequence[int]) -> list[str]:
    """Full vertex listing of the walk: x, then one word per flip."""
    words = [x]
    cur = list(x)
    size = len(cur)
    for p in seq:
        if not 1 <= p <= size:
            raise ValueError("position out of bounds")
        i = p - 1
        cur[i] = "0" if cur[i] == "1" else "1"
        words.append("".join(cur))
    return words


def last_vertex(x: str) -> str:
    """Endpoint of the basic path from x = 1u0v, in closed form: u01v."""
    u, v = decompose_dyck(x)
    return u + "01" + v
