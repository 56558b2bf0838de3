"""Constructors for the graph families the bounds are exercised on, plus an
exhaustive enumerator of small graphs up to isomorphism."""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import UnsupportedSizeError
from .graphs import Graph


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise ValueError("edgeless(n) needs n >= 1")
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def path_plus_clique(n: int, m: int) -> Graph:
    """A path on vertices 0..n-m followed by a clique on n-m..n-1, glued at
    vertex n-m. Chordal, with clique cover number (n-m)+1 and competition
    number 1, so it attains every possible value of k - (theta_E - n)."""
    if not 2 <= m <= n:
        raise ValueError("path_plus_clique(n, m) needs 2 <= m <= n")
    edges = [(i, i + 1) for i in range(n - m)]
    edges += list(combinations(range(n - m, n), 2))
    return Graph(n, edges)


def g_tn(t: int, n: int) -> Graph:
    """Hamilton path on 3tn vertices with n clique blocks: block b joins the
    vertices at positions 3tb+3, 3tb+6, ..., 3tb+3t (1-indexed positions;
    vertex index = position - 1).

    Every path edge is outside all triangles, so the graph meets the
    sufficient tightness condition; its clique cover number is
    (3tn - 1) + n and its competition number n + 1."""
    if t < 3 or n < 1:
        raise ValueError("g_tn(t, n) needs t >= 3 and n >= 1")
    size = 3 * t * n
    edges = [(i, i + 1) for i in range(size - 1)]
    for b in range(n):
        block = [3 * t * b + 3 * i - 1 for i in range(1, t + 1)]
        edges += list(combinations(block, 2))
    return Graph(size, edges)


def circulant(n: int, p: int) -> Graph:
    """Cayley graph on Z/nZ with connection set {+-1, ..., +-p}. For p >= 2
    every edge lies in a triangle, yet the clique cover number stays n
    because no clique covers two distance-p edges."""
    if n < 7 or p < 2 or 3 * p > n:
        raise ValueError("circulant(n, p) needs n >= 7 and 2 <= p <= n/3")
    edges = [(i, (i + d) % n) for i in range(n) for d in range(1, p + 1)]
    return Graph(n, edges)


def enumerate_graphs(n: int, dedup: bool = False):
    """Yield every labeled graph on n vertices; with dedup, one
    representative per isomorphism class (the lexicographically smallest
    edge bitmask, found by marking whole permutation orbits as seen)."""
    if n > 7:
        raise UnsupportedSizeError("enumerate_graphs supports n <= 7")
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    if not dedup:
        for mask in range(1 << nbits):
            yield _graph_from_mask(n, mask, pairs)
        return
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        tbl = [0] * nbits
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            tbl[i] = index[(a, b) if a < b else (b, a)]
        tables.append(tbl)
    seen = bytearray(1 << nbits)
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        yield _graph_from_mask(n, mask, pairs)
        for tbl in tables:
            img = 0
            rest = mask
            while rest:
                b = rest & -rest
                rest ^= b
                img |= 1 << tbl[b.bit_length() - 1]
            seen[img] = 1


def _graph_from_mask(n, mask, pairs):
    return Graph(n, (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))
