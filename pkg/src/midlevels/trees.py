"""Rooted tree views of Dyck words and the cycle-joining predicate.

A Dyck word with n ones encodes an ordered rooted tree with n edges: a
'1' opens an edge to a new leftmost child, the matching '0' closes it.
Rotation moves the root to its first child without changing the embedded
(plane) tree, so rotation orbits of words correspond to plane trees.

`canonical_root` picks one rooted encoding per plane tree, anchored at
the tree's center.  `is_flip_tree` marks, within each non-star orbit,
exactly one word whose path the generator replaces by its modified
variant; that single swap per orbit is what merges the short cycles into
one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from collections.abc import Sequence

from .bitwords import build_match_table, decompose_dyck, is_dyck_word

__all__ = [
    "RootedTree",
    "tree_from_dyck",
    "dyck_from_tree",
    "rotate",
    "rotation_orbit",
    "centers",
    "booth_min_rotation",
    "canonical_root",
    "is_pair_source",
    "is_pair_image",
    "pair_image",
    "pair_preimage",
    "TreeShape",
    "tree_shape",
    "is_flip_tree",
]


@dataclass
class RootedTree:
    """Ordered rooted tree.  Vertex ids are preorder numbers, root is 0."""

    parent: list[int | None]
    children: list[list[int]]

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1


def tree_from_dyck(x: str) -> RootedTree:
    """Decode a Dyck word into its ordered rooted tree."""
    if not is_dyck_word(x):
        raise ValueError("not a Dyck word")
    parent: list[int | None] = [None]
    children: list[list[int]] = [[]]
    cur = 0
    for c in x:
        if c == "1":
            v = len(parent)
            parent.append(cur)
            children.append([])
            children[cur].append(v)
            cur = v
        else:
            cur = parent[cur]  # type: ignore[assignment]
    return RootedTree(parent, children)


def _structure_word(children: Sequence[Sequence[int]], root: int) -> str:
    # Preorder emit: '1' entering a child, '0' leaving it.  Iterative so
    # deep trees cannot hit the recursion limit.
    out: list[str] = []
    stack = [(root, iter(children[root]))]
    while stack:
        v, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                out.append("0")
        else:
            out.append("1")
            stack.append((w, iter(children[w])))
    return "".join(out)


def dyck_from_tree(t: RootedTree) -> str:
    """Encode an ordered rooted tree back into its Dyck word."""
    return _structure_word(t.children, 0)


def rotate(x: str) -> str:
    """Move the root to its first child: 1u0v becomes u1v0.

    The plane tree is unchanged; iterating rotate walks the full orbit of
    rooted encodings.
    """
    if not x:
        raise ValueError("empty word")
    u, v = decompose_dyck(x)
    return u + "1" + v + "0"


def rotation_orbit(x: str) -> list[str]:
    """All rooted encodings of x's plane tree, starting at x."""
    orbit = [x]
    y = rotate(x)
    while y != x:
        orbit.append(y)
        if len(orbit) > len(x) + 1:
            # theory: the orbit period divides the corner count 2n
            raise RuntimeError("rotation orbit did not close")
        y = rotate(y)
    return orbit


def _adjacency(t: RootedTree) -> list[list[int]]:
    # parent first, then children: the cyclic order around each vertex
    # that rotation preserves
    adj: list[list[int]] = [list(t.children[0])]
    for v in range(1, t.size):
        adj.append([t.parent[v]] + t.children[v])  # type: ignore[operator]
    return adj


def centers(t: RootedTree) -> list[int]:
    """The one or two center vertices of the underlying unrooted tree."""
    size = t.size
    if size <= 2:
        return list(range(size))
    adj = _adjacency(t)
    deg = [len(a) for a in adj]
    layer = [v for v in range(size) if deg[v] == 1]
    alive = size
    while alive > 2:
        alive -= len(layer)
        nxt: list[int] = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def booth_min_rotation(seq: Sequence[int]) -> int:
    """1-based start index of the lexicographically least rotation.

    Failure-function variant, linear time; ties resolve to the smallest
    index.  Works for any comparable symbols, in particular the -1/0/1
    streams used to canonicalize center-rooted trees.
    """
    s = list(seq)
    n = len(s)
    if n == 0:
        raise ValueError("empty sequence")
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k + 1


def _rooted_word(adj: Sequence[Sequence[int]], root: int, first: int) -> str:
    # Encoding of the whole tree rooted at `root` with `first` as the
    # leftmost child; child order elsewhere follows the cyclic order
    # after the entry edge.
    lst = adj[root]
    i = lst.index(first)
    out: list[str] = []
    stack = [(root, iter(list(lst[i:]) + list(lst[:i])))]
    while stack:
        v, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                out.append("0")
            continue
        out.append("1")
        nxt = adj[w]
        j = nxt.index(v)
        stack.append((w, iter(list(nxt[j + 1 :]) + list(nxt[:j]))))
    return "".join(out)


def _subtree_word(adj: Sequence[Sequence[int]], v: int, came: int) -> str:
    # Encoding of the branch hanging at v when entered along came -> v.
    lst = adj[v]
    j = lst.index(came)
    out: list[str] = []
    stack = [(v, iter(list(lst[j + 1 :]) + list(lst[:j])))]
    while stack:
        u, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                out.append("0")
            continue
        out.append("1")
        nxt = adj[w]
        j2 = nxt.index(u)
        stack.append((w, iter(list(nxt[j2 + 1 :]) + list(nxt[:j2]))))
    return "".join(out)


def canonical_root(x: str) -> str:
    """One fixed rooted encoding of x's plane tree.

    Rooted at the tree's center: with two centers, the smaller of the two
    encodings that put one center on top of the other; with one center,
    the center's subtree list is rotated to its least position (subtrees
    separated by a symbol below '0' and '1', so comparison respects the
    plane cyclic order).  Invariant under rotate.
    """
    if not x:
        return ""
    t = tree_from_dyck(x)
    adj = _adjacency(t)
    cs = centers(t)
    if len(cs) == 2:
        a, b = cs
        return min(_rooted_word(adj, a, b), _rooted_word(adj, b, a))
    c = cs[0]
    seq: list[int] = []
    for w in adj[c]:
        seq.append(-1)
        seq.extend(1 if ch == "1" else 0 for ch in _subtree_word(adj, w, c))
    k = booth_min_rotation(seq) - 1
    rot = seq[k:] + seq[:k]
    parts: list[list[str]] = []
    for sym in rot:
        if sym == -1:
            parts.append([])
        else:
            parts[-1].append("1" if sym == 1 else "0")
    return "".join("1" + "".join(p) + "0" for p in parts)


def is_pair_source(x: str) -> bool:
    """Whether a Dyck word has the source shape 110w0v of a pair."""
    return x[:3] == "110"


def is_pair_image(x: str) -> bool:
    """Whether a Dyck word has the target shape 101w0v of a pair."""
    return x[:3] == "101"


def pair_image(x: str) -> str:
    """Map the pair source 110w0v to its partner 101w0v."""
    if x[:3] != "110":
        raise ValueError("not in tau domain")
    return "101" + x[3:]


def pair_preimage(y: str) -> str:
    """Map the pair target 101w0v back to its source 110w0v."""
    if y[:3] != "101":
        raise ValueError("not in tau image")
    return "110" + y[3:]


@dataclass(frozen=True)
class TreeShape:
    """Root-independent shape facts about a tree."""

    is_star: bool
    has_thin_leaf: bool
    is_dumbbell: bool


def tree_shape(x: str) -> TreeShape:
    """Shape predicates of x's underlying unrooted tree.

    A star has at most one non-leaf vertex; a thin leaf is a leaf whose
    neighbor has degree two; a dumbbell has exactly two non-leaf
    vertices.
    """
    t = tree_from_dyck(x)
    size = t.size
    deg = [len(c) for c in t.children]
    for v in range(1, size):
        deg[v] += 1
    non_leaves = sum(1 for d in deg if d != 1)
    thin = False
    for v in range(size):
        if deg[v] == 1:
            nb = t.parent[v] if v else t.children[0][0]
            if deg[nb] == 2:
                thin = True
                break
    return TreeShape(non_leaves <= 1, thin, non_leaves == 2)


def is_flip_tree(x: str) -> bool:
    """Whether x is its orbit's designated cycle-joining word.

    Exactly one word per non-star plane tree answers True.  The test
    re-roots the canonical encoding step by step (each rotation is O(1)
    on the mutable child lists) until the first rotation exposing either
    a thin leaf as 1100v, or, for trees without thin leaves, a leftmost
    broom as 1(10)^k 0 v with k >= 2; x qualifies iff it equals that
    rotation, and in the broom case the remainder v = (10)^l must have
    l >= k.  Stars never qualify.  Raises if x is not a pair source.
    """
    if x[:3] != "110":
        raise ValueError("not in tau domain")
    # Qualifying words start 1100 (thin-leaf form) or 11010 (broom
    # form); any other prefix loses without building a tree.
    if x[3] == "1":
        if x[4] == "1":
            return False
        shape = tree_shape(x)
        # a thin leaf would force the 1100 form, which x cannot match
        if shape.is_star or shape.has_thin_leaf:
            return False
        thin = False
    else:
        if len(x) == 4:
            return False  # the lone two-edge tree is a star
        # prefix 1100 exhibits a thin leaf directly: the first branch
        # is a single edge hanging off a degree-two vertex
        thin = True
    xhat = canonical_root(x)
    t = tree_from_dyck(xhat)
    children: list[deque[int]] = [deque(c) for c in t.children]
    root = 0
    for _ in range(len(x) + 1):
        ch = children[root]
        a = ch[0]
        ca = children[a]
        if thin:
            if len(ca) == 1 and not children[ca[0]]:
                return _structure_word(children, root) == x
        else:
            k = len(ca)
            if k >= 2 and all(not children[c] for c in ca):
                rest = list(ch)[1:]
                if all(not children[c] for c in rest) and len(rest) < k:
                    return False
                return _structure_word(children, root) == x
        # rotate in place: first child up, old root becomes its last child
        ch.popleft()
        ca.append(root)
        root = a
    raise RuntimeError("no rotation of the canonical rooting matches")
