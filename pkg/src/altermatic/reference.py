"""Brute-force reference implementations.

Everything here recomputes a quantity the production code obtains by a
smarter route, using the most literal method available: explicit
subsequence enumeration, restricted-growth-string assignment enumeration,
full ternary enumeration of sign words.  They exist to cross-check the
fast paths in the test suite and the command line self-test; never call
them for real work.
"""

from __future__ import annotations

from itertools import combinations, product

from .core import Hypergraph, LinearOrder, SignVector, SimpleGraph
from .coloring import chromatic_at_most
from .kneser import kneser_graph


def alt_by_enumeration(x: SignVector) -> int:
    """Longest alternating subsequence by trying every subsequence."""
    signs = [x.sign_at(p) for p in range(1, x.n + 1) if x.sign_at(p) != 0]
    best = 0
    for size in range(1, len(signs) + 1):
        for picks in combinations(range(len(signs)), size):
            if all(signs[picks[i]] != signs[picks[i + 1]] for i in range(size - 1)):
                best = size
                break  # longer sizes may still work; keep scanning sizes
    return best


def longest_alternating_starts(x: SignVector) -> set[int]:
    """Signs that can begin a maximum-length alternating subsequence."""
    signs = [x.sign_at(p) for p in range(1, x.n + 1) if x.sign_at(p) != 0]
    best = 0
    starts: set[int] = set()
    for size in range(1, len(signs) + 1):
        for picks in combinations(range(len(signs)), size):
            if all(signs[picks[i]] != signs[picks[i + 1]] for i in range(size - 1)):
                if size > best:
                    best = size
                    starts = set()
                starts.add(signs[picks[0]])
    return starts


def chromatic_by_enumeration(g: SimpleGraph) -> int:
    """Exact chromatic number by enumerating canonical color assignments.

    Assignments are generated in restricted growth form (a vertex may use
    at most one color beyond those already used), which visits every
    coloring exactly once up to color renaming.  Exponential; keep the
    graph at eight or so vertices.
    """
    n = g.vcount
    if n == 0:
        return 0

    best = n

    def extend(v: int, colors: list[int], used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if v == n:
            best = used
            return
        for c in range(1, min(used + 1, best - 1) + 1):
            ok = True
            m = g.rows[v] & ((1 << v) - 1)
            while m:
                low = m & -m
                m ^= low
                if colors[low.bit_length() - 1] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                extend(v + 1, colors, max(used, c))
                colors[v] = 0

    extend(0, [0] * n, 0)
    return best


def feasible_by_scan(h: Hypergraph, reds: int, blues: int, k: int) -> bool:
    """Feasibility from scratch: collect survivors, then test their budget."""
    survivors = [e for e in h.edges if e & ~reds == 0 or e & ~blues == 0]
    if k == 1:
        return not survivors
    sub = Hypergraph(h.n, tuple(survivors)) if survivors else None
    if sub is None:
        return True
    return chromatic_at_most(kneser_graph(sub), k - 1)


def alt_sigma_by_enumeration(h: Hypergraph, order: LinearOrder, k: int) -> int:
    """Maximum alt over feasible words by visiting all 3**n of them."""
    n = h.n
    best = 0
    for word in product((0, 1, -1), repeat=n):
        reds = blues = 0
        for pos, s in enumerate(word):
            bit = 1 << (order.perm[pos] - 1)
            if s == 1:
                reds |= bit
            elif s == -1:
                blues |= bit
        if not feasible_by_scan(h, reds, blues, k):
            continue
        a = 0
        last = 0
        for s in word:
            if s and s != last:
                a += 1
                last = s
        if a > best:
            best = a
            if best == n:
                break
    return best
