"""The competition graph operator and exact competition numbers.

The competition number k(g) is the least k such that g plus k isolated
vertices is the competition graph of some acyclic digraph. decide_k
searches for such a digraph directly; competition_number_exact iterates k
upward from the clique cover lower bound theta_E(g) - n + 2. Every answer
comes with a Realization witness that verify_realization can check from
scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .cliques import CliqueCover, theta_E, theta_E_restricted
from .errors import UnsupportedSizeError
from .graphs import Digraph, Graph, _bits, add_isolated, edge_triangle_partition, remove_edges

DEFAULT_CAP = 12


@dataclass(frozen=True)
class Realization:
    """Witness that k(g) <= extra.

    The digraph lives on n + extra vertices: 0..n-1 are the graph's own
    vertices, n..n+extra-1 the added ones, which stay isolated in the
    competition graph. topo_order certifies acyclicity.
    """

    digraph: Digraph
    extra: int
    topo_order: tuple


def competition_graph(d: Digraph) -> Graph:
    """Edge xy iff x and y have a common out-neighbor (shared prey)."""
    edges = set()
    for v in range(d.n):
        preds = list(_bits(d.pred[v]))
        for i in range(len(preds)):
            for j in range(i + 1, len(preds)):
                edges.add((preds[i], preds[j]))
    return Graph(d.n, edges)


def is_acyclic(d: Digraph):
    """A topological order (smallest-index-first among ready vertices), or
    None when the digraph has a directed cycle."""
    indeg = [d.pred[v].bit_count() for v in range(d.n)]
    order = []
    ready = sorted(v for v in range(d.n) if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in _bits(d.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return order if len(order) == d.n else None


def verify_realization(g: Graph, r: Realization) -> bool:
    """Check a Realization against g from first principles: vertex counts,
    a valid topological order, and exact competition-graph equality."""
    d = r.digraph
    if d.n != g.n + r.extra or len(r.topo_order) != d.n:
        return False
    if sorted(r.topo_order) != list(range(d.n)):
        return False
    pos = {v: i for i, v in enumerate(r.topo_order)}
    if any(pos[u] >= pos[v] for u, v in d.arcs):
        return False
    return competition_graph(d).edges == add_isolated(g, r.extra).edges


def decide_k(g: Graph, k: int, cap: int = DEFAULT_CAP):
    """Search for a Realization with exactly k added vertices.

    Returns None when no acyclic digraph realizes g plus k isolated
    vertices. The search places the real vertices in every order, assigns
    each a maximal in-clique among its predecessors, and closes with a
    restricted clique cover of budget k for the leftover edges.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n + k > cap:
        raise UnsupportedSizeError(
            f"decide_k needs n + k <= {cap} (got {g.n + k}); raise the cap to force"
        )
    edges = g.edge_list()
    m = len(edges)
    pair_bit = [-1] * (g.n * g.n)
    for i, (u, v) in enumerate(edges):
        pair_bit[u * g.n + v] = i
        pair_bit[v * g.n + u] = i
    cand_masks = _backend.maximal_clique_masks(g.n, g.adj)
    cand_cover = []
    for cm in cand_masks:
        vs = list(_bits(cm))
        e = 0
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                e |= 1 << pair_bit[vs[i] * g.n + vs[j]]
        cand_cover.append(e)
    res = _backend.search_realization(
        g.n, g.adj, k, m, pair_bit, cand_masks, cand_cover
    )
    if res is None:
        return None
    order, in_cliques, tail = res
    arcs = set()
    for i in range(g.n):
        w = order[i]
        # single-vertex in-neighborhoods create no competition edge;
        # dropping their arcs leaves a smaller witness with the same C(D)
        if in_cliques[i].bit_count() < 2:
            continue
        for x in _bits(in_cliques[i]):
            arcs.add((x, w))
    for j, c in enumerate(tail):
        for x in _bits(cand_masks[c]):
            arcs.add((x, g.n + j))
    return Realization(
        digraph=Digraph(g.n + k, arcs),
        extra=k,
        topo_order=tuple(order) + tuple(range(g.n, g.n + k)),
    )


def competition_number_exact(g: Graph, cap: int = DEFAULT_CAP):
    """The exact competition number with a witness Realization.

    Iterates k upward from max(0, theta_E(g) - n + 2); the iteration always
    terminates because k(g) never exceeds theta_E(g). The lower bound only
    holds from two vertices up, so smaller graphs start at 0.
    """
    theta, _ = theta_E(g)
    k = max(0, theta - g.n + 2) if g.n >= 2 else 0
    while True:
        r = decide_k(g, k, cap=cap)
        if r is not None:
            return k, r
        k += 1


def construct_opsut(g: Graph, cover: CliqueCover) -> Realization:
    """Realization with size(cover) - 1 added vertices, built from a full
    edge clique cover: the first clique preys on a vertex outside it, every
    other clique on a fresh added vertex.

    Rejects complete and edgeless graphs; on those the construction has no
    room (no outside vertex, or no clique at all).
    """
    n = g.n
    if g.m == 0:
        raise ValueError("graph is edgeless")
    if g.m == n * (n - 1) // 2:
        raise ValueError("graph is complete")
    covered = set()
    for cl in cover.cliques:
        members = sorted(cl)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if not g.has_edge(members[i], members[j]):
                    raise ValueError("cover contains a non-clique")
                covered.add((members[i], members[j]))
    if covered != set(g.edges):
        raise ValueError("cover does not cover every edge")
    first = cover.cliques[0]
    v = min(set(range(n)) - set(first))
    arcs = {(x, v) for x in first}
    for i, cl in enumerate(cover.cliques[1:]):
        z = n + i
        arcs.update((x, z) for x in cl)
    extra = cover.size - 1
    topo = tuple(sorted(set(range(n)) - {v})) + (v,) + tuple(range(n, n + extra))
    return Realization(Digraph(n + extra, arcs), extra, topo)


def construct_main(g: Graph, cap: int = DEFAULT_CAP) -> Realization:
    """Realization from the triangle split: solve the triangle-free
    leftover graph exactly, then give each clique of a minimum restricted
    cover of the triangle edges its own added prey vertex. Uses
    k(leftover) + cover size added vertices in total."""
    part = edge_triangle_partition(g)
    h = remove_edges(g, part.in_triangle)
    k_h, base = competition_number_exact(h, cap=cap)
    count, cover = theta_E_restricted(part.in_triangle, g)
    arcs = set(base.digraph.arcs)
    start = g.n + k_h
    for j, cl in enumerate(cover.cliques):
        arcs.update((x, start + j) for x in cl)
    extra = k_h + count
    topo = base.topo_order + tuple(range(start, start + count))
    return Realization(Digraph(g.n + extra, arcs), extra, topo)
