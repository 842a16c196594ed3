"""Command line interface: gen, verify, bench.

Exit codes: 0 success, 1 verification failure, 2 malformed flags,
3 invalid start vertex.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .hamcycle import GeneratorState, default_start, ham_cycle, total_vertices
from .verify import format_check, run_suite


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="midlevels",
        description="Cyclic one-bit-change listings of the middle two "
        "levels of the Boolean lattice of order 2n+1.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit vertices of the cyclic listing")
    g.add_argument("-n", type=int, required=True, help="half the word length")
    g.add_argument("--start", help="start vertex (default 1^n 0^(n+1))")
    g.add_argument(
        "--count",
        type=int,
        default=None,
        help="vertices to emit (default: one full cycle)",
    )
    g.add_argument(
        "--format",
        choices=("bits", "delta"),
        default="bits",
        help="bits: one vertex per line; delta: start vertex, then one "
        "flipped position per line",
    )
    g.add_argument(
        "--flips",
        choices=("on", "off"),
        default="on",
        help="off walks the unjoined short cycles",
    )

    v = sub.add_parser("verify", help="run the structural check suite")
    v.add_argument("--max-n", type=int, default=6, dest="max_n")

    b = sub.add_parser("bench", help="time vertex generation to a null sink")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("--count", type=int, default=10_000_000)
    return p


@dataclass(frozen=True)
class BenchResult:
    n: int
    vertices: int
    seconds: float

    @property
    def ns_per_vertex(self) -> float:
        return self.seconds * 1e9 / self.vertices

    @property
    def vertices_per_second(self) -> float:
        return self.vertices / self.seconds


def run_benchmark(n: int, count: int) -> BenchResult:
    """Time count visits from the canonical start into a do-nothing sink."""

    def sink(_buf: bytearray) -> None:
        return None

    t0 = time.perf_counter()
    ham_cycle(n, default_start(n), count, sink)
    dt = time.perf_counter() - t0
    return BenchResult(n, count, dt)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        print("error: -n must be at least 1", file=sys.stderr)
        return 2
    if args.count is not None and args.count < 1:
        print("error: --count must be at least 1", file=sys.stderr)
        return 2
    count = args.count if args.count is not None else total_vertices(args.n)
    try:
        state = GeneratorState(args.n, args.start, args.flips == "on")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    out = sys.stdout
    out.write(state.vertex())
    out.write("\n")
    if args.format == "bits":
        for _ in range(count - 1):
            next(state)
            out.write(state.vertex())
            out.write("\n")
    else:
        for _ in range(count - 1):
            next(state)
            out.write(f"{state.last_flip}\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= 9:
        print("error: --max-n must be between 1 and 9", file=sys.stderr)
        return 2
    results = run_suite(args.max_n)
    for r in results:
        print(format_check(r))
    return 0 if all(r.passed for r in results) else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.n < 1 or args.count < 1:
        print("error: -n and --count must be at least 1", file=sys.stderr)
        return 2
    r = run_benchmark(args.n, args.count)
    print(f"vertices {r.vertices}")
    print(f"elapsed_s {r.seconds:.3f}")
    print(f"ns_per_vertex {r.ns_per_vertex:.1f}")
    print(f"vertices_per_s {r.vertices_per_second:.0f}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "gen":
        return _cmd_gen(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_bench(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
