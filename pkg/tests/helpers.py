"""Brute-force oracles shared by the test modules.

Everything here is deliberately naive: quadratic matchers, full
enumerations, all-rotations minima.  The oracles answer the same
questions as the library in the slowest way that is obviously right,
so the two sides fail independently.
"""

from __future__ import annotations

from itertools import product
from math import comb


def all_words(length: int) -> list[str]:
    return ["".join(bits) for bits in product("01", repeat=length)]


def prefix_heights(x: str) -> list[int]:
    """Running +1/-1 sums, one entry per prefix, leading 0 included."""
    h = 0
    out = [0]
    for c in x:
        h += 1 if c == "1" else -1
        out.append(h)
    return out


def brute_class(x: str) -> str:
    # classification by counting below-zero prefixes directly
    heights = prefix_heights(x)
    if heights[-1] != 0:
        return "other"
    below = sum(1 for h in heights[1:] if h < 0)
    if below == 0:
        return "dyck"
    if below == 1:
        return "near-dyck"
    return "other"


def brute_dyck_words(n: int) -> list[str]:
    return [w for w in all_words(2 * n) if brute_class(w) == "dyck"]


def brute_near_dyck_words(n: int) -> list[str]:
    return [w for w in all_words(2 * n) if brute_class(w) == "near-dyck"]


def brute_match_table(x: str) -> list[int]:
    """Pair positions by rescanning forward from every 1: quadratic."""
    n = len(x)
    table = [0] * (n + 1)
    for p in range(1, n + 1):
        if x[p - 1] != "1":
            continue
        depth = 0
        for q in range(p, n + 1):
            depth += 1 if x[q - 1] == "1" else -1
            if depth == 0:
                table[p] = q
                table[q] = p
                break
    return table


def brute_min_rotation(seq) -> int:
    """1-based index of the least rotation, smallest index on ties."""
    items = list(seq)
    n = len(items)
    rots = [(items[i:] + items[:i], i + 1) for i in range(n)]
    return min(rots)[1]


def brute_centers(parent: list, children: list) -> list[int]:
    """Center vertices by computing every eccentricity with BFS."""
    size = len(parent)
    adj: list[list[int]] = [[] for _ in range(size)]
    for v in range(1, size):
        adj[parent[v]].append(v)
        adj[v].append(parent[v])

    def ecc(s: int) -> int:
        dist = {s: 0}
        todo = [s]
        for v in todo:
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    todo.append(u)
        return max(dist.values())

    eccs = [ecc(v) for v in range(size)]
    lo = min(eccs)
    return [v for v in range(size) if eccs[v] == lo]


def middle_words(n: int) -> list[str]:
    """All 2n-bit words whose weight is n or n+1."""
    return [w for w in all_words(2 * n) if w.count("1") in (n, n + 1)]


def hamming(a: str, b: str) -> int:
    assert len(a) == len(b)
    return sum(1 for ca, cb in zip(a, b) if ca != cb)


def is_rotation(a: list[str], b: list[str]) -> bool:
    """Whether listing a is a cyclic rotation of listing b."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return b[i:] + b[:i] == a


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
