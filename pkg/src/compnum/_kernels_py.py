"""Pure-Python search kernels.

Everything here works on plain integers used as bitmasks (vertex sets and
edge sets), with no width limit. The compiled extension in _kernels.pyx
mirrors these functions line for line inside 64-bit limits; both must make
identical choices so witnesses agree byte for byte across backends.
"""

from __future__ import annotations


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def maximal_clique_masks(n: int, adj) -> list[int]:
    """All maximal cliques of the graph as vertex bitmasks, ascending.

    Bron-Kerbosch with a max-degree-in-P pivot; ties go to the lowest
    vertex, extension candidates are taken in ascending order.
    """
    if n == 0:
        return []
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        best_u, best_c = -1, -1
        mm = p | x
        while mm:
            b = mm & -mm
            mm ^= b
            u = b.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best_c:
                best_c, best_u = c, u
        ext = p & ~adj[best_u]
        while ext:
            b = ext & -ext
            ext ^= b
            v = b.bit_length() - 1
            expand(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    expand(0, (1 << n) - 1, 0)
    out.sort()
    return out


def min_edge_clique_cover(cover_masks, target: int, budget: int):
    """Smallest subfamily of cover_masks whose union contains target.

    Returns the chosen indices, or None when no cover of size <= budget
    exists. Branch and bound: branch on the lowest uncovered bit over the
    candidates covering it in index order; prune with a greedy set of
    pairwise non-co-coverable bits; a greedy cover seeds the incumbent and
    only strict improvements replace it, so the result is deterministic.
    """
    if target == 0:
        return []
    if budget <= 0:
        return None
    nbits = target.bit_length()
    covers_bit = [[] for _ in range(nbits)]
    co_cover = [0] * nbits
    for idx, cm in enumerate(cover_masks):
        t = cm & target
        while t:
            b = t & -t
            t ^= b
            i = b.bit_length() - 1
            covers_bit[i].append(idx)
            co_cover[i] |= cm & target
    t = target
    while t:
        b = t & -t
        t ^= b
        if not covers_bit[b.bit_length() - 1]:
            return None

    def lower_bound(un):
        cnt = 0
        while un:
            b = un & -un
            cnt += 1
            un &= ~co_cover[b.bit_length() - 1]
        return cnt

    sel = []
    un = target
    while un:
        best_i, best_c = -1, 0
        for idx, cm in enumerate(cover_masks):
            c = (cm & un).bit_count()
            if c > best_c:
                best_c, best_i = c, idx
        sel.append(best_i)
        un &= ~cover_masks[best_i]

    best_sel = sel if len(sel) <= budget else None
    limit = min(len(sel), budget + 1)
    chosen = []

    def dfs(un):
        nonlocal best_sel, limit
        if un == 0:
            limit = len(chosen)
            best_sel = chosen.copy()
            return
        if len(chosen) + lower_bound(un) >= limit:
            return
        b = un & -un
        for idx in covers_bit[b.bit_length() - 1]:
            chosen.append(idx)
            dfs(un & ~cover_masks[idx])
            chosen.pop()

    dfs(target)
    return best_sel


def _max_cliques_within(adj, placed: int) -> list[int]:
    """Maximal cliques of the subgraph induced by the placed vertex set."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        best_u, best_c = -1, -1
        mm = p | x
        while mm:
            b = mm & -mm
            mm ^= b
            u = b.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best_c:
                best_c, best_u = c, u
        ext = p & ~adj[best_u]
        while ext:
            b = ext & -ext
            ext ^= b
            v = b.bit_length() - 1
            expand(r | b, p & adj[v] & placed, x & adj[v] & placed)
            p &= ~b
            x |= b

    expand(0, placed, 0)
    out.sort()
    return out


def search_realization(n, adj, k, m, pair_bit, cand_masks, cand_cover):
    """Decide whether the graph plus k extra prey vertices is realizable as
    the competition graph of an acyclic digraph, returning a witness.

    Model: real vertices are placed one by one; the vertex at each position
    receives an in-neighborhood that is a clique among the already placed
    vertices (maximality there loses nothing), covering the clique's edges.
    The k extras go last, one arbitrary clique of the graph each, so the
    leftover edges just need a restricted cover of size <= k.

    pair_bit is a flat n*n table mapping a vertex pair to its edge bit;
    cand_masks/cand_cover hold the maximal cliques of the whole graph and
    their edge coverage, used for the tail covers and the pruning bound.

    Returns (order, in_clique_mask per position, tail candidate indices)
    or None. Fully deterministic.
    """
    full_v = (1 << n) - 1
    full_e = (1 << m) - 1

    co_cover = [0] * m
    for cm in cand_cover:
        t = cm
        while t:
            b = t & -t
            t ^= b
            co_cover[b.bit_length() - 1] |= cm

    def lower_bound(un):
        cnt = 0
        while un:
            b = un & -un
            cnt += 1
            un &= ~co_cover[b.bit_length() - 1]
        return cnt

    def edge_mask_of(vmask):
        e = 0
        vs = []
        t = vmask
        while t:
            b = t & -t
            t ^= b
            vs.append(b.bit_length() - 1)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                e |= 1 << pair_bit[vs[i] * n + vs[j]]
        return e

    options_cache = {}

    def options(placed):
        opts = options_cache.get(placed)
        if opts is None:
            if placed == 0:
                opts = [(0, 0)]
            else:
                opts = []
                seen = set()
                for vm in _max_cliques_within(adj, placed):
                    em = edge_mask_of(vm)
                    if em not in seen:
                        seen.add(em)
                        opts.append((vm, em))
            options_cache[placed] = opts
        return opts

    visited = set()
    tail_infeasible = set()
    order = [0] * n
    in_cliques = [0] * n
    tail_sel = None

    def dfs(placed, covered, depth):
        nonlocal tail_sel
        if depth == n:
            un = full_e & ~covered
            if un in tail_infeasible:
                return False
            res = min_edge_clique_cover(cand_cover, un, k)
            if res is None:
                tail_infeasible.add(un)
                return False
            tail_sel = res
            return True
        if lower_bound(full_e & ~covered) > (n - depth) + k:
            return False
        key = (placed << m) | covered
        if key in visited:
            return False
        opts = options(placed)
        rem = full_v & ~placed
        while rem:
            b = rem & -rem
            rem ^= b
            v = b.bit_length() - 1
            for vm, em in opts:
                order[depth] = v
                in_cliques[depth] = vm
                if dfs(placed | b, covered | em, depth + 1):
                    return True
        visited.add(key)
        return False

    if dfs(0, 0, 0):
        return order, in_cliques, tail_sel
    return None
