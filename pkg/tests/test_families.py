from itertools import combinations
from math import comb

import pytest

from compnum import (
    Graph,
    UnsupportedSizeError,
    canonical_form,
    circulant,
    complete,
    complete_bipartite,
    competition_number_exact,
    cycle,
    edge_triangle_partition,
    edgeless,
    enumerate_graphs,
    g_tn,
    path,
    path_plus_clique,
    theta_E,
    triangles,
)


def test_standard_families():
    assert complete(4).m == 6
    assert cycle(4) == Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert edgeless(3).m == 0
    assert path(4).m == 3
    assert complete_bipartite(2, 3).m == 6
    for bad in (lambda: cycle(2), lambda: complete(0), lambda: complete_bipartite(0, 2)):
        with pytest.raises(ValueError):
            bad()


def test_path_plus_clique():
    g = path_plus_clique(5, 3)
    assert theta_E(g)[0] == 3
    assert competition_number_exact(g)[0] == 1
    assert path_plus_clique(4, 4) == complete(4)
    g = path_plus_clique(4, 2)
    assert g == path(4)
    assert theta_E(g)[0] == 3 and competition_number_exact(g)[0] == 1
    with pytest.raises(ValueError):
        path_plus_clique(3, 1)
    with pytest.raises(ValueError):
        path_plus_clique(3, 4)


def test_g_tn_structure():
    g = g_tn(3, 1)
    assert g.n == 9
    assert triangles(g) == [(2, 5, 8)]
    part = edge_triangle_partition(g)
    assert part.not_in_triangle == frozenset(
        tuple(sorted((i, i + 1))) for i in range(8)
    )
    g = g_tn(3, 2)
    assert g.n == 18
    assert triangles(g) == [(2, 5, 8), (11, 14, 17)]
    g = g_tn(6, 2)
    assert g.n == 36 and g.m == 35 + 2 * comb(6, 2)
    with pytest.raises(ValueError):
        g_tn(2, 1)


def test_g_tn_triangle_count_formula():
    for t, n in [(3, 1), (3, 2), (4, 1), (5, 1)]:
        g = g_tn(t, n)
        assert len(triangles(g)) == n * comb(t, 3)
        part = edge_triangle_partition(g)
        assert part.not_in_triangle == frozenset(
            tuple(sorted((i, i + 1))) for i in range(g.n - 1)
        )


def test_circulant():
    g = circulant(7, 2)
    assert g.m == 14
    assert all(g.degree(v) == 4 for v in range(7))
    assert len(edge_triangle_partition(g).not_in_triangle) == 0
    assert circulant(8, 2).m == 16
    with pytest.raises(ValueError):
        circulant(7, 1)
    with pytest.raises(ValueError):
        circulant(6, 2)


def test_circulant_rotation_invariant_canonical_form():
    for n, p in [(7, 2), (8, 2)]:
        g = circulant(n, p)
        rotated = Graph(n, [((u + 1) % n, (v + 1) % n) for u, v in g.edges])
        assert canonical_form(g) == canonical_form(rotated)


def test_enumeration_counts(reps, reps7):
    assert [len(reps[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert len(reps7) == 1044
    assert len(list(enumerate_graphs(2, dedup=False))) == 2
    assert len(list(enumerate_graphs(3, dedup=False))) == 8


def test_enumeration_representatives_not_isomorphic(reps):
    for n in range(1, 7):
        forms = {canonical_form(g) for g in reps[n]}
        assert len(forms) == len(reps[n])


def test_enumeration_size_guard():
    with pytest.raises(UnsupportedSizeError):
        list(enumerate_graphs(8))
