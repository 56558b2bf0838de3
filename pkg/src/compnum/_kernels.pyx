# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels.

Mirrors _kernels_py.py line for line inside 64-bit masks: same branch
orders, same tie-breaking, identical witnesses. The _backend module routes
oversized instances to the pure-Python versions instead.
"""

from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil
    int __builtin_ctzll(u64) nogil
    int __builtin_clzll(u64) nogil


cdef inline int _pop(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef class _BronKerbosch:
    cdef vector[u64] adj
    cdef vector[u64] out

    cdef void expand(self, u64 r, u64 p, u64 x):
        cdef u64 mm, b, ext
        cdef int u, v, c, best_u, best_c
        if p == 0 and x == 0:
            self.out.push_back(r)
            return
        best_u = -1
        best_c = -1
        mm = p | x
        while mm:
            b = mm & (0 - mm)
            mm ^= b
            u = _ctz(b)
            c = _pop(p & self.adj[u])
            if c > best_c:
                best_c = c
                best_u = u
        ext = p & ~self.adj[best_u]
        while ext:
            b = ext & (0 - ext)
            ext ^= b
            v = _ctz(b)
            self.expand(r | b, p & self.adj[v], x & self.adj[v])
            p &= ~b
            x |= b


def maximal_clique_masks(int n, adj):
    """All maximal cliques as vertex bitmasks, ascending."""
    cdef _BronKerbosch bk = _BronKerbosch()
    cdef int i
    if n == 0:
        return []
    for i in range(n):
        bk.adj.push_back(<u64> adj[i])
    bk.expand(0, (<u64> 1 << n) - 1, 0)
    out = [bk.out[i] for i in range(<int> bk.out.size())]
    out.sort()
    return out


cdef class _CoverSolver:
    cdef vector[u64] cov
    cdef vector[vector[int]] covers_bit
    cdef vector[u64] co_cover
    cdef int limit
    cdef vector[int] best
    cdef bint has_best
    cdef vector[int] chosen

    cdef int lower_bound(self, u64 un):
        cdef int cnt = 0
        cdef u64 b
        while un:
            b = un & (0 - un)
            cnt += 1
            un &= ~self.co_cover[_ctz(b)]
        return cnt

    cdef void dfs(self, u64 un):
        cdef u64 b
        cdef size_t i
        cdef int idx
        if un == 0:
            self.limit = <int> self.chosen.size()
            self.best = self.chosen
            self.has_best = True
            return
        if (<int> self.chosen.size()) + self.lower_bound(un) >= self.limit:
            return
        b = un & (0 - un)
        for i in range(self.covers_bit[_ctz(b)].size()):
            idx = self.covers_bit[_ctz(b)][i]
            self.chosen.push_back(idx)
            self.dfs(un & ~self.cov[idx])
            self.chosen.pop_back()

    cdef bint solve(self, u64 target, int budget):
        """Fills self.best; returns False when no cover fits the budget."""
        cdef u64 t, b, un
        cdef int i, nbits, idx, best_i, best_c, c
        cdef vector[int] sel
        self.has_best = False
        if target == 0:
            self.best.clear()
            self.has_best = True
            return True
        if budget <= 0:
            return False
        nbits = 64 - __builtin_clzll(target)
        self.covers_bit.assign(nbits, vector[int]())
        self.co_cover.assign(nbits, <u64> 0)
        for idx in range(<int> self.cov.size()):
            t = self.cov[idx] & target
            while t:
                b = t & (0 - t)
                t ^= b
                i = _ctz(b)
                self.covers_bit[i].push_back(idx)
                self.co_cover[i] |= self.cov[idx] & target
        t = target
        while t:
            b = t & (0 - t)
            t ^= b
            if self.covers_bit[_ctz(b)].size() == 0:
                return False

        un = target
        while un:
            best_i = -1
            best_c = 0
            for idx in range(<int> self.cov.size()):
                c = _pop(self.cov[idx] & un)
                if c > best_c:
                    best_c = c
                    best_i = idx
            sel.push_back(best_i)
            un &= ~self.cov[best_i]

        if (<int> sel.size()) <= budget:
            self.best = sel
            self.has_best = True
            self.limit = <int> sel.size()
        else:
            self.limit = budget + 1
        self.chosen.clear()
        self.dfs(target)
        return self.has_best


def min_edge_clique_cover(cover_masks, target, budget):
    """Smallest subfamily covering target, or None when over budget."""
    cdef _CoverSolver solver = _CoverSolver()
    cdef int i
    for i in range(len(cover_masks)):
        solver.cov.push_back(<u64> cover_masks[i])
    if not solver.solve(<u64> target, <int> budget):
        return None
    return [solver.best[i] for i in range(<int> solver.best.size())]


cdef class _RealizationSearch:
    cdef int n, m, k
    cdef u64 full_v, full_e
    cdef vector[u64] adj
    cdef vector[int] pair_bit
    cdef vector[u64] cand_masks
    cdef vector[u64] cand_cover
    cdef vector[u64] co_cover
    cdef unordered_set[u64] visited
    cdef unordered_set[u64] tail_infeasible
    cdef unordered_map[u64, vector[u64]] options_cache  # interleaved vm, em
    cdef vector[int] order
    cdef vector[u64] in_cliques
    cdef vector[int] tail_sel
    cdef vector[u64] bk_out
    cdef _CoverSolver tail_solver

    cdef int lower_bound(self, u64 un):
        cdef int cnt = 0
        cdef u64 b
        while un:
            b = un & (0 - un)
            cnt += 1
            un &= ~self.co_cover[_ctz(b)]
        return cnt

    cdef void bk_expand(self, u64 r, u64 p, u64 x):
        cdef u64 mm, b, ext
        cdef int u, v, c, best_u, best_c
        if p == 0 and x == 0:
            self.bk_out.push_back(r)
            return
        best_u = -1
        best_c = -1
        mm = p | x
        while mm:
            b = mm & (0 - mm)
            mm ^= b
            u = _ctz(b)
            c = _pop(p & self.adj[u])
            if c > best_c:
                best_c = c
                best_u = u
        ext = p & ~self.adj[best_u]
        while ext:
            b = ext & (0 - ext)
            ext ^= b
            v = _ctz(b)
            self.bk_expand(r | b, p & self.adj[v], x & self.adj[v])
            p &= ~b
            x |= b

    cdef u64 edge_mask_of(self, u64 vmask):
        cdef u64 e = 0, t = vmask, b
        cdef vector[int] vs
        cdef size_t i, j
        while t:
            b = t & (0 - t)
            t ^= b
            vs.push_back(_ctz(b))
        for i in range(vs.size()):
            for j in range(i + 1, vs.size()):
                e |= <u64> 1 << self.pair_bit[vs[i] * self.n + vs[j]]
        return e

    cdef vector[u64]* options(self, u64 placed):
        cdef vector[u64] opts
        cdef vector[u64] sorted_cl
        cdef unordered_set[u64] seen
        cdef u64 vm, em
        cdef size_t i
        if self.options_cache.count(placed) == 0:
            if placed == 0:
                opts.push_back(0)
                opts.push_back(0)
            else:
                self.bk_out.clear()
                self.bk_expand(0, placed, 0)
                sorted_cl = self.bk_out
                _sort_vec(sorted_cl)
                for i in range(sorted_cl.size()):
                    vm = sorted_cl[i]
                    em = self.edge_mask_of(vm)
                    if seen.count(em) == 0:
                        seen.insert(em)
                        opts.push_back(vm)
                        opts.push_back(em)
            self.options_cache[placed] = opts
        return &self.options_cache[placed]

    cdef bint tail_ok(self, u64 un):
        if un == 0:
            self.tail_sel.clear()
            return True
        if self.tail_infeasible.count(un):
            return False
        if not self.tail_solver.solve(un, self.k):
            self.tail_infeasible.insert(un)
            return False
        self.tail_sel = self.tail_solver.best
        return True

    cdef bint dfs(self, u64 placed, u64 covered, int depth):
        cdef u64 key, rem, b, vm, em
        cdef int v
        cdef size_t i
        cdef vector[u64]* opts
        if depth == self.n:
            return self.tail_ok(self.full_e & ~covered)
        if self.lower_bound(self.full_e & ~covered) > (self.n - depth) + self.k:
            return False
        key = (placed << self.m) | covered
        if self.visited.count(key):
            return False
        opts = self.options(placed)
        rem = self.full_v & ~placed
        while rem:
            b = rem & (0 - rem)
            rem ^= b
            v = _ctz(b)
            for i in range(0, opts.size(), 2):
                vm = opts[0][i]
                em = opts[0][i + 1]
                self.order[depth] = v
                self.in_cliques[depth] = vm
                if self.dfs(placed | b, covered | em, depth + 1):
                    return True
        self.visited.insert(key)
        return False


cdef void _sort_vec(vector[u64]& v):
    cdef size_t i, j
    cdef u64 tmp
    # insertion sort; clique lists per induced subgraph stay small
    for i in range(1, v.size()):
        tmp = v[i]
        j = i
        while j > 0 and v[j - 1] > tmp:
            v[j] = v[j - 1]
            j -= 1
        v[j] = tmp


def search_realization(int n, adj, int k, int m, pair_bit, cand_masks, cand_cover):
    """Witness search for "graph + k isolated vertices is a competition
    graph of an acyclic digraph"; see the pure-Python twin for the model."""
    cdef _RealizationSearch s = _RealizationSearch()
    cdef int i
    cdef u64 cm, t, b
    s.n = n
    s.m = m
    s.k = k
    s.full_v = (<u64> 1 << n) - 1 if n else 0
    s.full_e = (<u64> 1 << m) - 1 if m else 0
    for i in range(n):
        s.adj.push_back(<u64> adj[i])
    for i in range(n * n):
        s.pair_bit.push_back(<int> pair_bit[i])
    s.tail_solver = _CoverSolver()
    for i in range(len(cand_masks)):
        s.cand_masks.push_back(<u64> cand_masks[i])
        cm = <u64> cand_cover[i]
        s.cand_cover.push_back(cm)
        s.tail_solver.cov.push_back(cm)
    s.co_cover.assign(m if m else 1, <u64> 0)
    for i in range(<int> s.cand_cover.size()):
        cm = s.cand_cover[i]
        t = cm
        while t:
            b = t & (0 - t)
            t ^= b
            s.co_cover[_ctz(b)] |= cm
    s.order.assign(n if n else 1, 0)
    s.in_cliques.assign(n if n else 1, <u64> 0)
    if not s.dfs(0, 0, 0):
        return None
    order = [s.order[i] for i in range(n)]
    cliques = [s.in_cliques[i] for i in range(n)]
    tail = [s.tail_sel[i] for i in range(<int> s.tail_sel.size())]
    return order, cliques, tail
