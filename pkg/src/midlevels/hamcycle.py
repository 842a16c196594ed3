"""The cyclic generator over the two middle levels.

Vertices are the bitstrings of length 2n+1 with weight n or n+1; each
step flips one bit.  The walk is organized in rounds of 4n+2 visits: a
forward pass along one path of the length-2n words with last bit 0, a
flip of the last bit to 1, a mirrored backward pass, and a flip back to
0, which lands on the next path's first vertex.  Path boundaries are the
only points where any O(n) bookkeeping happens, so the amortized cost
per visit is constant and the working set stays O(n).

`GeneratorState` can start at any vertex: the constructor derives which
path owns the start vertex and resumes mid-round, so every start yields
the same cyclic listing, merely rotated.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from math import comb

from .bitwords import is_dyck_word, rev_complement, decompose_near_dyck
from .flipseq import flip_sequence, pair_source_sequence, pair_target_sequence
from .trees import is_flip_tree, pair_image, pair_preimage

__all__ = [
    "path_first_vertex",
    "forward_sequence",
    "GeneratorState",
    "init",
    "ham_cycle",
    "generate",
    "total_vertices",
    "default_start",
]

_PHASE_NAMES = ("forward", "match-up", "backward", "match-down")


def total_vertices(n: int) -> int:
    """Number of distinct vertices: both middle binomials of 2n+1."""
    return 2 * comb(2 * n + 1, n)


def default_start(n: int) -> str:
    return "1" * n + "0" * (n + 1)


def path_first_vertex(z: str) -> str:
    """First vertex of the basic path through z.

    z is a word of length 2n and weight n or n+1.  The result y is the
    Dyck word whose walk under flip_sequence visits z; the map is
    computed directly from z's lattice path, splitting on the weight and
    on whether the minimum level is touched once or more than once.
    """
    n2 = len(z)
    if n2 == 0 or n2 % 2 or z.strip("01"):
        raise ValueError("not a middle-levels word")
    n = n2 // 2
    wt = z.count("1")
    if wt not in (n, n + 1):
        raise ValueError("not a middle-levels word")

    heights = [0] * (n2 + 1)
    h = 0
    for i, c in enumerate(z, start=1):
        h += 1 if c == "1" else -1
        heights[i] = h
    m = min(heights)
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    touches: list[int] = []
    for p, lev in enumerate(heights):
        if lev not in first:
            first[lev] = p
        last[lev] = p
        if lev == m:
            touches.append(p)
    unique = len(touches) == 1

    us: list[str] = []
    vs: list[str] = []

    def descend(down_to: int) -> int:
        # one piece per new level reached on the way down to down_to;
        # the separating zeros are the first arrivals at each level
        prev = 0
        for lev in range(-1, down_to - 1, -1):
            pt = first[lev]
            us.append(z[prev : pt - 1])
            prev = pt
        return prev

    def ascend(levels: range, start_point: int) -> int:
        prev = start_point
        for lev in levels:
            pt = last[lev]
            vs.append(z[prev:pt])
            prev = pt + 1
        return prev

    if wt == n and unique:
        t = touches[0]
        start = descend(m + 1)
        w = z[start : t - 1]
        prev = ascend(range(m + 1, 0), t + 1)
        v = z[prev:]
    elif wt == n and not unique:
        descend(m)
        t2 = touches[1]
        w = z[touches[0] + 1 : t2 - 1]
        prev = ascend(range(m, 0), t2)
        v = z[prev:]
    elif unique:  # weight n + 1
        t = descend(m)
        a = last[m + 1]
        w = z[t + 1 : a]
        prev = ascend(range(m + 2, 2), a + 1)
        v = z[prev:]
    else:  # weight n + 1, lowest level touched at least twice
        descend(m)
        pen, lastpt = touches[-2], touches[-1]
        us.append(z[touches[0] : pen])
        w = z[pen + 1 : lastpt - 1]
        prev = ascend(range(m + 1, 2), lastpt + 1)
        v = z[prev:]

    parts: list[str] = []
    for piece in us:
        parts.append("1")
        parts.append(piece)
    parts.append("1")
    parts.append(w)
    for piece in vs:
        parts.append("0")
        parts.append(piece)
    parts.append("0")
    parts.append(v)
    return "".join(parts)


def forward_sequence(z: str, flips: bool = True) -> list[int]:
    """Flip sequence the generator walks from first vertex z.

    With flips enabled, the one designated word per plane-tree orbit
    (and its partner) get the modified pair rules; everything else walks
    the basic sequence.
    """
    if flips:
        if z[:3] == "110" and is_flip_tree(z):
            return pair_source_sequence(z)
        if z[:3] == "101" and is_flip_tree(pair_preimage(z)):
            return pair_target_sequence(z)
    return flip_sequence(z)


def _locate(start: str, seq: Sequence[int], target: str) -> int:
    # Index of target along the walk from start, found in O(n) overall
    # by tracking the mismatch count instead of comparing whole words.
    cur = bytearray(start.encode())
    tgt = target.encode()
    diff = sum(1 for a, b in zip(cur, tgt) if a != b)
    if diff == 0:
        return 0
    for t, p in enumerate(seq, start=1):
        i = p - 1
        cur[i] ^= 1
        diff += -1 if cur[i] == tgt[i] else 1
        if diff == 0:
            return t
    raise RuntimeError("vertex is not on its derived path")


class GeneratorState:
    """Resumable cursor into the cyclic listing for one n.

    next(state) advances one vertex and returns the internal buffer: a
    bytearray of ASCII '0'/'1' codes with a sentinel byte at index 0, so
    buffer[p] is the bit at 1-based position p.  The buffer is owned by
    the state and overwritten in place; use vertex() for a string
    snapshot.  i counts visits, the start vertex included.
    """

    __slots__ = ("n", "flips", "i", "_buf", "_seq", "_k", "_phase", "_last")

    def __init__(self, n: int, start: str | None = None, flips: bool = True):
        if n < 1:
            raise ValueError("n must be at least 1")
        size = 2 * n + 1
        if start is None:
            start = default_start(n)
        if len(start) != size or start.strip("01") or start.count("1") not in (n, n + 1):
            raise ValueError("not a middle-levels word")
        self.n = n
        self.flips = flips
        self.i = 1
        self._buf = bytearray(b"0") + start.encode()
        self._last: int | None = None
        z = start[:-1]
        if start[-1] == "0":
            if is_dyck_word(z):
                self._seq = forward_sequence(z, flips)
                self._k = 0
                self._phase = 0
                return
            ystar = path_first_vertex(z)
            if flips:
                # z is an interior vertex: if its basic path was traded
                # away in a pair, z now lies on the partner's walk
                if ystar[:3] == "110" and is_flip_tree(ystar):
                    ystar = pair_image(ystar)
                elif ystar[:3] == "101" and is_flip_tree(pair_preimage(ystar)):
                    ystar = pair_preimage(ystar)
            seq = forward_sequence(ystar, flips)
            t = _locate(ystar, seq, z)
            self._seq = seq
            if t == len(seq):
                self._k = 0
                self._phase = 1
            else:
                self._k = t
                self._phase = 0
        else:
            # last bit 1: mid-backward pass, which mirrors a basic path
            zbar = rev_complement(z)
            g = path_first_vertex(zbar)
            s = flip_sequence(g)
            t = _locate(g, s, zbar)
            if t == 0:
                self._seq = []
                self._k = 0
                self._phase = 3
            else:
                self._seq = [size - q for q in reversed(s)]
                self._k = len(s) - t
                self._phase = 2

    def __iter__(self) -> GeneratorState:
        return self

    def __next__(self) -> bytearray:
        ph = self._phase
        buf = self._buf
        if ph == 0 or ph == 2:
            k = self._k
            seq = self._seq
            p = seq[k]
            buf[p] ^= 1
            k += 1
            if k == len(seq):
                self._phase = ph + 1
                self._k = 0
            else:
                self._k = k
            self._last = p
        elif ph == 1:
            p = 2 * self.n + 1
            buf[p] = 49
            self._last = p
            self._start_backward()
        else:
            p = 2 * self.n + 1
            buf[p] = 48
            self._last = p
            self._start_forward()
        self.i += 1
        return buf

    def _start_backward(self) -> None:
        size = 2 * self.n + 1
        e = self._buf[1:size].decode()
        u, v = decompose_near_dyck(e)
        g = "1" + rev_complement(v) + "0" + rev_complement(u)
        s = flip_sequence(g)
        self._seq = [size - q for q in reversed(s)]
        self._k = 0
        self._phase = 2

    def _start_forward(self) -> None:
        z = self._buf[1 : 2 * self.n + 1].decode()
        self._seq = forward_sequence(z, self.flips)
        self._k = 0
        self._phase = 0

    @property
    def buffer(self) -> bytearray:
        """The live vertex buffer; treat as read-only."""
        return self._buf

    @property
    def last_flip(self) -> int | None:
        """1-based position changed by the most recent step, if any."""
        return self._last

    @property
    def phase(self) -> str:
        return _PHASE_NAMES[self._phase]

    @property
    def at_first_vertex(self) -> bool:
        """True when the current vertex starts a forward pass."""
        return self._phase == 0 and self._k == 0

    def vertex(self) -> str:
        """String snapshot of the current vertex."""
        return self._buf[1:].decode()


def init(n: int, x: str, flips: bool = True) -> tuple[GeneratorState, list[str]]:
    """Start at x and run to the next path boundary.

    Returns (state, visited): visited begins with x and ends with the
    first vertex of the next forward pass; state.i == len(visited).  At
    most one round of 4n+2 visits.
    """
    state = GeneratorState(n, x, flips)
    visited = [state.vertex()]
    while not state.at_first_vertex:
        next(state)
        visited.append(state.vertex())
    return state, visited


def ham_cycle(
    n: int,
    x: str,
    count: int,
    sink: Callable[[bytearray], object],
    flips: bool = True,
) -> None:
    """Emit count consecutive vertices starting at x into sink.

    sink receives the live buffer (see GeneratorState) and must copy
    whatever it keeps.  count may exceed the number of vertices; the
    listing wraps cyclically.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    state = GeneratorState(n, x, flips)
    sink(state.buffer)
    advance = state.__next__
    for _ in range(count - 1):
        sink(advance())


def generate(
    n: int,
    start: str | None = None,
    count: int | None = None,
    flips: bool = True,
) -> Iterator[str]:
    """Yield vertices as strings; count defaults to one full cycle."""
    if count is None:
        count = total_vertices(n)
    if count < 1:
        raise ValueError("count must be at least 1")
    state = GeneratorState(n, start, flips)
    yield state.vertex()
    for _ in range(count - 1):
        next(state)
        yield state.vertex()
