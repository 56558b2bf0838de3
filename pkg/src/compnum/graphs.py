"""Undirected and directed graph types plus the structural predicates the
rest of the package conditions on: triangles, chordality, holes, cycles,
cycle vertices, isolated and pendant vertices.

Vertices are dense indices 0..n-1 and adjacency is kept as bitmasks, so the
search kernels can consume graphs without conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import MalformedInputError, UnsupportedSizeError


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph: no loops, no multi-edges."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise MalformedInputError("vertex count must be nonnegative")
        seen = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u},{v}) out of range for n={n}")
            e = _norm(u, v)
            if e in seen:
                continue
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(seen)
        self.adj = tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges sorted lexicographically; the canonical edge order."""
        return sorted(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Directed graph: no loops; arcs are ordered pairs."""

    __slots__ = ("n", "arcs", "succ", "pred")

    def __init__(self, n: int, arcs=()):
        if n < 0:
            raise MalformedInputError("vertex count must be nonnegative")
        succ = [0] * n
        pred = [0] * n
        aset = set()
        for u, v in arcs:
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"arc ({u},{v}) out of range for n={n}")
            aset.add((u, v))
            succ[u] |= 1 << v
            pred[v] |= 1 << u
        self.n = n
        self.arcs = frozenset(aset)
        self.succ = tuple(succ)
        self.pred = tuple(pred)

    def __eq__(self, other):
        return (
            isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, a={len(self.arcs)})"


@dataclass(frozen=True)
class EdgePartition:
    """Split of the edge set by triangle membership.

    ``in_triangle`` holds the edges whose endpoints have a common neighbor,
    ``not_in_triangle`` the rest; the two sets partition the edge set.
    """

    in_triangle: frozenset
    not_in_triangle: frozenset


@dataclass(frozen=True)
class GraphStats:
    isolated: tuple
    pendants: tuple
    components: tuple
    degrees: tuple

    @property
    def isolated_count(self) -> int:
        return len(self.isolated)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def degree_sequence(self) -> tuple:
        return tuple(sorted(self.degrees, reverse=True))


def from_edge_list(n: int, pairs) -> Graph:
    """Build a graph from (u, v) pairs; duplicates collapse, loops are errors."""
    return Graph(n, pairs)


def add_isolated(g: Graph, t: int) -> Graph:
    """Return g with t fresh degree-zero vertices appended."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return Graph(g.n + t, g.edges)


def remove_edges(g: Graph, f) -> Graph:
    """Delete the edge set f; the vertex set is unchanged."""
    fset = {_norm(u, v) for u, v in f}
    if not fset <= g.edges:
        raise ValueError("edges to remove are not all present")
    return Graph(g.n, g.edges - fset)


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete vertex v; higher indices shift down by one."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")

    def shift(x):
        return x - 1 if x > v else x

    kept = [(shift(a), shift(b)) for a, b in g.edges if v not in (a, b)]
    return Graph(g.n - 1, kept)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques as sorted triples, lexicographically ordered."""
    out = []
    for u, v in g.edge_list():
        common = g.adj[u] & g.adj[v]
        # count each triangle once: third vertex above both endpoints
        for w in _bits(common >> (v + 1)):
            out.append((u, v, w + v + 1))
    out.sort()
    return out


def edge_triangle_partition(g: Graph) -> EdgePartition:
    """Partition the edges by whether the endpoints share a neighbor."""
    tri = set()
    bare = set()
    for e in g.edges:
        u, v = e
        if g.adj[u] & g.adj[v]:
            tri.add(e)
        else:
            bare.add(e)
    return EdgePartition(frozenset(tri), frozenset(bare))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(tuple(_bits(comp)))
        unseen &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def basic_stats(g: Graph) -> GraphStats:
    degs = tuple(g.degree(v) for v in range(g.n))
    return GraphStats(
        isolated=tuple(v for v in range(g.n) if degs[v] == 0),
        pendants=tuple(v for v in range(g.n) if degs[v] == 1),
        components=tuple(connected_components(g)),
        degrees=degs,
    )


def is_chordal(g: Graph):
    """Chordality test via maximum-cardinality search.

    Returns (True, order) where order is a perfect elimination ordering
    (first vertex eliminated first), or (False, None). The ordering is a
    witness: verifying it needs no knowledge of how it was found.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    visit = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        visit.append(best)
        for u in _bits(g.adj[best]):
            if not visited[u]:
                weight[u] += 1
    peo = visit[::-1]
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    for i, v in enumerate(peo):
        later = 0
        for u in _bits(g.adj[v]):
            if pos[u] > i:
                later |= 1 << u
        for u in _bits(later):
            if later & ~(g.adj[u] | (1 << u)):
                return False, None
    return True, peo


def holes(g: Graph, cap: int | None = 2) -> list[tuple[int, ...]]:
    """Induced cycles of length >= 4, each reported once up to rotation and
    reflection.

    A hole is listed starting from its smallest vertex, continuing toward
    the smaller of that vertex's two cycle neighbors. Enumeration stops
    after ``cap`` holes; pass None for all of them.
    """
    out = []
    n = g.n

    def extend(s, path, path_mask, interior_adj):
        # path: induced path from s; interior_adj = union of adj over
        # path[1:-1], used to reject chords in a single mask test.
        tail = path[-1]
        for w in _bits(g.adj[tail] & ~path_mask):
            if w <= s or (interior_adj >> w) & 1:
                continue
            if (g.adj[s] >> w) & 1:
                if len(path) >= 3 and path[1] < w:
                    out.append(tuple(path) + (w,))
                    if cap is not None and len(out) >= cap:
                        return True
                continue
            if extend(s, path + [w], path_mask | (1 << w), interior_adj | g.adj[tail]):
                return True
        return False

    for s in range(n):
        for a in _bits(g.adj[s]):
            if a <= s:
                continue
            if extend(s, [s, a], (1 << s) | (1 << a), 0):
                return out
    return out


def _blocks(g: Graph) -> list[frozenset]:
    """Biconnected components as vertex sets (bridges appear as 2-sets)."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks = []
    edge_stack = []
    timer = [0]

    def dfs(u, parent):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        for v in g.neighbors(u):
            if v == parent:
                continue
            if disc[v] == -1:
                edge_stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    verts = set()
                    while True:
                        e = edge_stack.pop()
                        verts.update(e)
                        if e == (u, v):
                            break
                    blocks.append(frozenset(verts))
            elif disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for root in range(g.n):
        if disc[root] == -1:
            dfs(root, -1)
    return blocks


def cycle_vertices(g: Graph) -> set[int]:
    """Vertices lying on at least one cycle: members of blocks with three or
    more vertices."""
    on_cycle = set()
    for blk in _blocks(g):
        if len(blk) >= 3:
            on_cycle |= blk
    return on_cycle


def has_cycle_geq4(g: Graph) -> bool:
    """Whether some (not necessarily induced) cycle has length at least 4.

    Per component: with at most one triangle the cycle space dimension
    settles it exactly; otherwise a cycle of length >= 4 exists iff the
    component has a hole or two adjacent vertices with two common
    neighbors (a 4-cycle inside two overlapping triangles).
    """
    for comp in connected_components(g):
        cset = set(comp)
        cedges = [e for e in g.edges if e[0] in cset]
        tri_count = sum(1 for t in triangles(g) if t[0] in cset)
        if tri_count <= 1:
            if len(cedges) >= len(comp) + (1 if tri_count else 0):
                return True
            continue
        sub = Graph(g.n, cedges)
        if not is_chordal(sub)[0]:
            return True
        for u, v in cedges:
            if (sub.adj[u] & sub.adj[v]).bit_count() >= 2:
                return True
    return False


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal iff isomorphic. Brute force over all
    vertex permutations, so only graphs with n <= 8 are accepted."""
    if g.n > 8:
        raise UnsupportedSizeError("canonical_form supports n <= 8")
    pairs = list(combinations(range(g.n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    best = None
    for perm in permutations(range(g.n)):
        mask = 0
        for u, v in g.edges:
            mask |= 1 << index[_norm(perm[u], perm[v])]
        if best is None or mask < best:
            best = mask
    return bytes([g.n]) + (best or 0).to_bytes(4, "big")
