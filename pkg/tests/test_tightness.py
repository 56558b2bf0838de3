import pytest

from compnum import (
    Graph,
    NEEDS_EXACT,
    NOT_TIGHT,
    TIGHT,
    bounds_report,
    circulant,
    classify_one_triangle,
    classify_two_triangle,
    complete,
    cycle,
    edgeless,
    g_tn,
    is_competitively_tight,
    main_upper_bound,
    necessary_condition,
    opsut_bounds,
    path,
    reduce_preserving_tightness,
    sufficient_condition,
    triangle_free_k,
)

PAW = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
# two vertex-joined faces of the triangular prism: two edge-disjoint
# triangles, not chordal, three holes
PRISM = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def test_opsut_bounds_examples():
    assert opsut_bounds(complete(4)) == (0, 1)
    assert opsut_bounds(cycle(4)) == (2, 4)
    assert opsut_bounds(g_tn(3, 1)) == (2, 9)
    assert opsut_bounds(edgeless(1)) == (0, 0)


def test_main_upper_examples():
    assert main_upper_bound(g_tn(3, 1)) == 2
    assert main_upper_bound(cycle(4)) == 2
    assert main_upper_bound(complete(4)) == 1
    assert main_upper_bound(edgeless(1)) == 0


def test_triangle_free_k_examples():
    assert triangle_free_k(cycle(4)) == 2
    assert triangle_free_k(Graph(3, [(0, 1)])) == 0
    assert triangle_free_k(path(4)) == 1
    assert triangle_free_k(edgeless(1)) == 0
    with pytest.raises(ValueError):
        triangle_free_k(complete(3))


def test_classifier_examples():
    assert is_competitively_tight(cycle(4)).status == TIGHT
    assert is_competitively_tight(cycle(4)).rule == "triangle-free"
    verdict = is_competitively_tight(PAW)
    assert verdict.status == NOT_TIGHT and verdict.rule == "one-triangle"
    verdict = is_competitively_tight(circulant(7, 2), allow_exact=True)
    assert verdict.status == TIGHT
    # without the exact fallback the circulant stays undecided
    assert is_competitively_tight(circulant(7, 2)).status == NEEDS_EXACT


def test_classify_one_triangle_examples():
    shared_vertex = Graph(
        6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2)]
    )
    value, verdict = classify_one_triangle(shared_vertex)
    assert value == 1 and verdict.status == TIGHT
    value, verdict = classify_one_triangle(PAW)
    assert value == 1 and verdict.status == NOT_TIGHT
    with pytest.raises(ValueError):
        classify_one_triangle(cycle(4))


def test_classify_two_triangle_examples():
    verdict = classify_two_triangle(DIAMOND)
    assert verdict.status == NOT_TIGHT and "chordal" in verdict.detail
    assert "sharing an edge" in verdict.detail
    verdict = classify_two_triangle(BOWTIE)
    assert verdict.status == NOT_TIGHT and "chordal" in verdict.detail
    assert "edge-disjoint" in verdict.detail
    verdict = classify_two_triangle(PRISM)
    assert verdict.status == NEEDS_EXACT
    with pytest.raises(ValueError):
        classify_two_triangle(PAW)


def test_two_triangle_theta_detail_matches(sweep):
    from compnum import theta_E

    for rec in sweep["records"]:
        if rec.tri_count != 2 or not rec.connected:
            continue
        verdict = classify_two_triangle(rec.g)
        stated = int(verdict.detail.split("theta_E = ")[1].split(";")[0])
        assert stated == rec.theta


def test_sufficient_and_necessary_examples():
    for t, n in [(3, 1), (4, 1), (3, 2)]:
        assert sufficient_condition(g_tn(t, n))
    assert not sufficient_condition(circulant(7, 2))
    assert is_competitively_tight(circulant(7, 2), allow_exact=True).status == TIGHT
    assert necessary_condition(circulant(7, 2))


def test_reduce_preserving_tightness_examples():
    reduced, log = reduce_preserving_tightness(PAW)
    assert reduced == complete(3)
    assert log == [("pendant-removed", 3)]
    reduced, _ = reduce_preserving_tightness(path(5))
    assert reduced.n == 2 and reduced.m == 1
    reduced, log = reduce_preserving_tightness(cycle(4))
    assert reduced == cycle(4) and log == []
    # pendants of a K_2 component stay (removal would change k)
    two_k2 = Graph(4, [(0, 3), (1, 2)])
    reduced, log = reduce_preserving_tightness(two_k2)
    assert reduced == two_k2 and log == []


def test_classifier_sound_on_all_small_graphs(sweep):
    for rec in sweep["records"]:
        verdict = is_competitively_tight(rec.g)
        if verdict.status == TIGHT:
            assert rec.tight, (rec.g.n, sorted(rec.g.edges), verdict)
        if verdict.status == NOT_TIGHT:
            assert not rec.tight, (rec.g.n, sorted(rec.g.edges), verdict)
        if sufficient_condition(rec.g):
            assert rec.tight
        if not necessary_condition(rec.g):
            assert not rec.tight
        # with the exact fallback the answer is always definitive and right
        full = is_competitively_tight(rec.g, allow_exact=True)
        assert full.status == (TIGHT if rec.tight else NOT_TIGHT)


def test_reduction_preserves_tightness(sweep):
    by_key = {(rec.g.n, rec.g.edges): rec.tight for rec in sweep["records"]}

    def tight_of(g):
        from compnum import competition_number_exact, theta_E

        return competition_number_exact(g)[0] == theta_E(g)[0] - g.n + 2

    for rec in sweep["records"]:
        reduced, log = reduce_preserving_tightness(rec.g)
        if any(step[0] == "pendant-removed" for step in log):
            assert tight_of(reduced) == rec.tight


def test_bounds_report_invariants(sweep):
    for rec in sweep["records"]:
        report = bounds_report(rec.g, exact=rec.k)
        assert report.opsut_lower <= report.main_upper <= report.opsut_upper
        assert report.opsut_lower <= report.exact <= report.main_upper
        assert report.theta_e == rec.theta
