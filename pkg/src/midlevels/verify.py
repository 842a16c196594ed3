"""Structural checks over full desk-scale listings.

Everything here enumerates whole vertex sets or whole orbits, so it is
exponential in n by design.  The caps below bound accidental blowups;
they are defaults, not hard limits, and every entry point accepts an
override.  Results come back as CheckResult rows that format as
"CHECK <name> n=<n> PASS|FAIL <detail>".
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .bitwords import build_match_table, dyck_words
from .flipseq import (
    apply_flips,
    flip_sequence,
    pair_source_sequence,
    pair_target_sequence,
)
from .hamcycle import GeneratorState, generate, total_vertices
from .trees import canonical_root, is_flip_tree, pair_image, tree_from_dyck

__all__ = [
    "FULL_GRAPH_CAP",
    "TREE_GRAPH_CAP",
    "CheckResult",
    "format_check",
    "check_listing",
    "CycleSet",
    "two_factor",
    "plane_classes",
    "FlipGraph",
    "flip_graph",
    "is_spanning_tree",
    "TreeSignature",
    "tree_signature",
    "check_edge_monotonicity",
    "check_six_cycles",
    "run_suite",
]

# defaults for the exponential sweeps: full vertex sets up to n=9,
# plane-tree orbit graphs up to n=12
FULL_GRAPH_CAP = 9
TREE_GRAPH_CAP = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    passed: bool
    detail: str = ""


def format_check(c: CheckResult) -> str:
    status = "PASS" if c.passed else "FAIL"
    line = f"CHECK {c.name} n={c.n} {status}"
    return f"{line} {c.detail}" if c.detail else line


def check_listing(n: int, listing: Iterable[str]) -> list[CheckResult]:
    """Gray-code checks on a vertex listing.

    Verifies word shape, single-bit steps, weight alternation, and
    distinctness; when the listing has exactly the full vertex count,
    also the cyclic closure back to the first vertex.
    """
    seq = list(listing)
    size = 2 * n + 1
    results: list[CheckResult] = []

    bad_shape = sum(
        1
        for w in seq
        if len(w) != size or w.strip("01") or w.count("1") not in (n, n + 1)
    )
    results.append(
        CheckResult(
            "listing-shape",
            n,
            bad_shape == 0,
            f"{len(seq)} words" if not bad_shape else f"{bad_shape} malformed",
        )
    )

    bad_steps = 0
    bad_alt = 0
    for a, b in zip(seq, seq[1:]):
        if sum(1 for ca, cb in zip(a, b) if ca != cb) != 1:
            bad_steps += 1
        if abs(a.count("1") - b.count("1")) != 1:
            bad_alt += 1
    results.append(
        CheckResult(
            "listing-steps",
            n,
            bad_steps == 0,
            "" if not bad_steps else f"{bad_steps} non-unit steps",
        )
    )
    results.append(
        CheckResult(
            "listing-alternation",
            n,
            bad_alt == 0,
            "" if not bad_alt else f"{bad_alt} weight jumps",
        )
    )

    dup = len(seq) - len(set(seq))
    results.append(
        CheckResult(
            "listing-distinct", n, dup == 0, "" if not dup else f"{dup} duplicates"
        )
    )

    if len(seq) == total_vertices(n):
        closes = (
            sum(1 for ca, cb in zip(seq[-1], seq[0]) if ca != cb) == 1
        )
        results.append(
            CheckResult(
                "listing-closure",
                n,
                closes,
                "full cycle" if closes else "last vertex not adjacent to first",
            )
        )
    return results


@dataclass(frozen=True)
class CycleSet:
    """Disjoint cycles of the stepping rule, each rotated so its
    lexicographically least vertex comes first."""

    n: int
    flips: bool
    cycles: tuple[tuple[str, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cycles)

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]


def _anchor(verts: list[str]) -> tuple[str, ...]:
    i = verts.index(min(verts))
    return tuple(verts[i:] + verts[:i])


def two_factor(
    n: int, flips_enabled: bool, *, cap: int = FULL_GRAPH_CAP
) -> CycleSet:
    """Trace every cycle of the stepping rule over the whole vertex set.

    With flips disabled the rule decomposes the vertices into one cycle
    per plane tree; with flips enabled they merge into a single cycle.
    """
    if not 1 <= n <= cap:
        raise ValueError("desk-scale only")
    remaining = set(dyck_words(n))
    cycles: list[tuple[str, ...]] = []
    while remaining:
        z = min(remaining)
        start = z + "0"
        remaining.discard(z)
        state = GeneratorState(n, start, flips_enabled)
        verts = [start]
        while True:
            next(state)
            v = state.vertex()
            if state.at_first_vertex:
                if v == start:
                    break
                remaining.discard(v[:-1])
            verts.append(v)
        cycles.append(_anchor(verts))
    cycles.sort()
    return CycleSet(n, flips_enabled, tuple(cycles))


def plane_classes(n: int) -> dict[str, str]:
    """Map every Dyck word to its orbit's canonical encoding."""
    return {x: canonical_root(x) for x in dyck_words(n)}


@dataclass(frozen=True)
class FlipGraph:
    """Directed graph on plane-tree orbits: one arc per flip tree,
    from its own orbit to its partner's orbit."""

    n: int
    nodes: frozenset[str]
    edges: tuple[tuple[str, str], ...]


def flip_graph(n: int, *, cap: int = TREE_GRAPH_CAP) -> FlipGraph:
    if not 1 <= n <= cap:
        raise ValueError("desk-scale only")
    classes = plane_classes(n)
    edges = sorted(
        (classes[x], classes[pair_image(x)])
        for x in classes
        if x[:3] == "110" and is_flip_tree(x)
    )
    return FlipGraph(n, frozenset(classes.values()), tuple(edges))


def is_spanning_tree(g: FlipGraph) -> bool:
    """Whether g's edges form a spanning tree of its nodes (ignoring
    direction)."""
    nodes = list(g.nodes)
    if len(g.edges) != len(nodes) - 1:
        return False
    if any(a == b for a, b in g.edges):
        return False
    adj: dict[str, list[str]] = {v: [] for v in nodes}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {nodes[0]}
    todo = [nodes[0]]
    while todo:
        v = todo.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(nodes)


@dataclass(frozen=True, order=True)
class TreeSignature:
    """(leaves, non-terminal leaves, max degree); strictly increases in
    lexicographic order along every flip-graph arc."""

    leaves: int
    nonterminal_leaves: int
    max_degree: int


def tree_signature(x: str) -> TreeSignature:
    t = tree_from_dyck(x)
    size = t.size
    deg = [len(c) for c in t.children]
    for v in range(1, size):
        deg[v] += 1
    leaves = [v for v in range(size) if deg[v] == 1]
    skeleton = {v for v in range(size) if deg[v] != 1}

    def neighbors(v: int) -> list[int]:
        out = list(t.children[v])
        if v:
            out.append(t.parent[v])  # type: ignore[arg-type]
        return out

    if not skeleton:
        # single edge: both ends are leaves, no interior at all
        return TreeSignature(len(leaves), 0, max(deg))
    skel_leaves = {
        v
        for v in skeleton
        if sum(1 for u in neighbors(v) if u in skeleton) <= 1
    }
    terminal = sum(
        1 for v in leaves if any(u in skel_leaves for u in neighbors(v))
    )
    return TreeSignature(len(leaves), len(leaves) - terminal, max(deg))


def check_edge_monotonicity(g: FlipGraph) -> CheckResult:
    """Signature strictly increases along every arc of the flip graph."""
    bad = [
        (a, b)
        for a, b in g.edges
        if not tree_signature(a) < tree_signature(b)
    ]
    detail = f"{len(g.edges)} edges"
    if bad:
        a, b = bad[0]
        detail = f"{len(bad)} violations, first {a} -> {b}"
    return CheckResult("flip-graph-monotone", g.n, not bad, detail)


def _path_edges(verts: list[str]) -> list[frozenset[str]]:
    return [frozenset((a, b)) for a, b in zip(verts, verts[1:])]


def _six_cycle(x: str) -> tuple[list[str], set[frozenset[str]]]:
    # the six words agreeing with x = 110w0v outside positions 2, 3 and
    # the closer of position 1, in single-flip cyclic order
    b = build_match_table(x)[1]
    w, v = x[3 : b - 1], x[b:]
    combos = [
        ("1", "0", "0"),
        ("1", "0", "1"),
        ("0", "0", "1"),
        ("0", "1", "1"),
        ("0", "1", "0"),
        ("1", "1", "0"),
    ]
    verts = ["1" + s2 + s3 + w + sb + v for s2, s3, sb in combos]
    edges = {frozenset((verts[i], verts[(i + 1) % 6])) for i in range(6)}
    return verts, edges


def check_six_cycles(n: int, *, cap: int = FULL_GRAPH_CAP) -> list[CheckResult]:
    """Validate the path surgery behind every pair.

    For each pair (x = 110w0v, y = 101w0v): the modified walks cover the
    same ground with endpoints exchanged, and their edge sets differ
    from the basic ones by exactly that pair's six-cycle.  Across pairs
    the six-cycles are edge-disjoint, and on any one basic path the
    edges borrowed by different six-cycles never interleave.
    """
    if not 1 <= n <= cap:
        raise ValueError("desk-scale only")
    sources = [x for x in dyck_words(n) if x[:3] == "110"]

    endpoints_ok = True
    symdiff_ok = True
    seen_edges: dict[frozenset[str], int] = {}
    disjoint_ok = True
    c6_of_edge: dict[frozenset[str], int] = {}

    for idx, x in enumerate(sources):
        y = pair_image(x)
        basic_x = apply_flips(x, flip_sequence(x))
        basic_y = apply_flips(y, flip_sequence(y))
        mod_x = apply_flips(x, pair_source_sequence(x))
        mod_y = apply_flips(y, pair_target_sequence(y))
        if mod_x[-1] != basic_y[-1] or mod_y[-1] != basic_x[-1]:
            endpoints_ok = False
        _, c6 = _six_cycle(x)
        basic_edges = set(_path_edges(basic_x)) | set(_path_edges(basic_y))
        mod_edges = set(_path_edges(mod_x)) | set(_path_edges(mod_y))
        if basic_edges ^ c6 != mod_edges:
            symdiff_ok = False
        for e in c6:
            if e in seen_edges:
                disjoint_ok = False
            seen_edges[e] = idx
            c6_of_edge[e] = idx

    nesting_ok = True
    for z in dyck_words(n):
        edges = _path_edges(apply_flips(z, flip_sequence(z)))
        spans: dict[int, list[int]] = {}
        for i, e in enumerate(edges):
            c = c6_of_edge.get(e)
            if c is not None:
                spans.setdefault(c, []).append(i)
        ids = list(spans)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                a, b2 = spans[ids[i]], spans[ids[j]]
                if not (max(a) < min(b2) or max(b2) < min(a)):
                    nesting_ok = False

    return [
        CheckResult("six-cycle-endpoints", n, endpoints_ok, f"{len(sources)} pairs"),
        CheckResult("six-cycle-symdiff", n, symdiff_ok),
        CheckResult("six-cycle-disjoint", n, disjoint_ok),
        CheckResult("six-cycle-nesting", n, nesting_ok),
    ]


def run_suite(
    max_n: int = 6,
    *,
    full_cap: int = FULL_GRAPH_CAP,
    tree_cap: int = TREE_GRAPH_CAP,
) -> list[CheckResult]:
    """All structural checks for n = 1 .. max_n."""
    if not 1 <= max_n <= full_cap:
        raise ValueError("desk-scale only")
    results: list[CheckResult] = []
    for n in range(1, max_n + 1):
        results += check_listing(n, generate(n))

        classes = plane_classes(n)
        n_classes = len(set(classes.values()))
        plain = two_factor(n, False, cap=full_cap)
        ok = plain.count == n_classes and sum(plain.lengths) == total_vertices(n)
        results.append(
            CheckResult(
                "two-factor-count",
                n,
                ok,
                f"{plain.count} cycles over {sum(plain.lengths)} vertices",
            )
        )
        round_len = 4 * n + 2
        ok = all(length % round_len == 0 for length in plain.lengths)
        results.append(
            CheckResult(
                "two-factor-lengths",
                n,
                ok,
                f"all divisible by {round_len}" if ok else str(plain.lengths),
            )
        )

        joined = two_factor(n, True, cap=full_cap)
        ok = joined.count == 1 and joined.lengths == [total_vertices(n)]
        results.append(
            CheckResult(
                "single-cycle",
                n,
                ok,
                f"{joined.count} cycle(s), lengths {joined.lengths}",
            )
        )

        g = flip_graph(n, cap=tree_cap)
        results.append(
            CheckResult(
                "flip-graph-tree",
                g.n,
                is_spanning_tree(g),
                f"{len(g.nodes)} nodes, {len(g.edges)} edges",
            )
        )
        out_deg: dict[str, int] = {}
        for a, _ in g.edges:
            out_deg[a] = out_deg.get(a, 0) + 1
        ok = all(d <= 1 for d in out_deg.values())
        results.append(CheckResult("flip-graph-outdegree", n, ok))
        results.append(check_edge_monotonicity(g))

        results += check_six_cycles(n, cap=full_cap)
    return results
