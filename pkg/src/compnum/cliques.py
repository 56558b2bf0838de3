"""Maximal clique enumeration and exact edge clique covers.

theta_E(g) is the minimum number of cliques needed to cover every edge of
g; the restricted variant theta_E_restricted(f, g) only has to cover the
edges in f, still using cliques of g. Both are solved exactly by branch
and bound over the maximal cliques, which loses nothing: any clique in a
cover can be grown to a maximal one without uncovering anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .graphs import Graph, _bits, _norm


@dataclass(frozen=True)
class CliqueCover:
    """A family of cliques of ``host`` covering ``target_edges``."""

    cliques: tuple
    target_edges: frozenset
    host: Graph

    @property
    def size(self) -> int:
        return len(self.cliques)

    def validate(self) -> bool:
        """Check both invariants: every member induces a complete subgraph,
        and every target edge has both endpoints in some member."""
        for cl in self.cliques:
            for u in cl:
                for v in cl:
                    if u < v and not self.host.has_edge(u, v):
                        return False
        for u, v in self.target_edges:
            if not any(u in cl and v in cl for cl in self.cliques):
                return False
        return True


def maximal_cliques(g: Graph) -> list[frozenset]:
    """Inclusion-maximal cliques, each once, in ascending bitmask order."""
    return [frozenset(_bits(m)) for m in _backend.maximal_clique_masks(g.n, g.adj)]


def _edge_bits(edges):
    ordered = sorted(edges)
    index = {e: i for i, e in enumerate(ordered)}
    return ordered, index


def _coverage_masks(cand_masks, index):
    out = []
    for cm in cand_masks:
        vs = list(_bits(cm))
        e = 0
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                bit = index.get(_norm(vs[i], vs[j]))
                if bit is not None:
                    e |= 1 << bit
        out.append(e)
    return out


def _solve_cover(g: Graph, target_edges):
    ordered, index = _edge_bits(target_edges)
    cand_masks = _backend.maximal_clique_masks(g.n, g.adj)
    cover = _coverage_masks(cand_masks, index)
    target = (1 << len(ordered)) - 1
    sel = _backend.min_edge_clique_cover(cover, target, max(1, len(ordered)))
    cliques = tuple(frozenset(_bits(cand_masks[i])) for i in sel)
    return CliqueCover(cliques, frozenset(target_edges), g)


def theta_E(g: Graph) -> tuple[int, CliqueCover]:
    """Exact edge clique cover number with a minimum witness."""
    cover = _solve_cover(g, g.edges)
    return cover.size, cover


def theta_E_restricted(f, g: Graph) -> tuple[int, CliqueCover]:
    """Minimum number of cliques of g covering just the edges in f."""
    fset = frozenset(_norm(u, v) for u, v in f)
    if not fset <= g.edges:
        raise ValueError("restricted edge set is not a subset of the edges")
    cover = _solve_cover(g, fset)
    return cover.size, cover


def greedy_cover(f, g: Graph) -> CliqueCover:
    """Cover f by repeatedly taking the maximal clique covering the most
    still-uncovered edges (ties to the earlier clique). Valid, not
    necessarily minimum."""
    fset = frozenset(_norm(u, v) for u, v in f)
    if not fset <= g.edges:
        raise ValueError("restricted edge set is not a subset of the edges")
    ordered, index = _edge_bits(fset)
    cand_masks = _backend.maximal_clique_masks(g.n, g.adj)
    cover = _coverage_masks(cand_masks, index)
    un = (1 << len(ordered)) - 1
    chosen = []
    while un:
        best_i, best_c = -1, 0
        for idx, cm in enumerate(cover):
            c = (cm & un).bit_count()
            if c > best_c:
                best_c, best_i = c, idx
        chosen.append(best_i)
        un &= ~cover[best_i]
    cliques = tuple(frozenset(_bits(cand_masks[i])) for i in chosen)
    return CliqueCover(cliques, fset, g)
