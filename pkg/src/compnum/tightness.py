"""Closed-form competition number bounds and the tightness classifier.

A graph is competitively tight when its competition number attains the
Opsut lower bound theta_E(g) - n + 2. The classifier works through a fixed
pipeline of certificates (triangle-free formula, sufficient and necessary
conditions, the one- and two-triangle characterizations, and a bound
sandwich) and only falls back to exact search when asked to.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import theta_E, theta_E_restricted
from .graphs import (
    Graph,
    basic_stats,
    connected_components,
    edge_triangle_partition,
    has_cycle_geq4,
    holes,
    is_chordal,
    is_connected,
    remove_vertex,
    triangles,
)
from .solver import DEFAULT_CAP, competition_number_exact

TIGHT = "tight"
NOT_TIGHT = "not_tight"
NEEDS_EXACT = "needs_exact"


@dataclass(frozen=True)
class TightnessVerdict:
    status: str
    rule: str
    detail: str


@dataclass(frozen=True)
class BoundsReport:
    """All competition number bounds for one graph.

    opsut_lower is floored at zero; main_upper always sits between the two
    Opsut bounds, and the exact value (when present) between opsut_lower
    and main_upper."""

    theta_e: int
    theta_e_restricted_triangle: int
    not_in_triangle_count: int
    opsut_lower: int
    opsut_upper: int
    main_upper: int
    exact: int | None = None


def opsut_bounds(g: Graph) -> tuple[int, int]:
    """(max(0, theta_E - n + 2), theta_E): k always lies between these.

    The lower-bound argument needs two vertices (the first two spots in a
    topological order cover no edge); on zero or one vertex k is plainly 0,
    so the lower bound reported there is 0."""
    theta, _ = theta_E(g)
    if g.n <= 1:
        return 0, theta
    return max(0, theta - g.n + 2), theta


def main_upper_bound(g: Graph) -> int:
    """Upper bound from splitting off the triangle edges: cover them with
    theta_E(triangle edges; g) cliques, then treat the triangle-free rest
    with its exact formula. Never worse than theta_E.

    On a single vertex the rest contributes k = 0, not the two-or-more
    vertex expression, keeping the bound at theta_E."""
    part = edge_triangle_partition(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    if g.n <= 1:
        return theta_tri
    outside = len(part.not_in_triangle)
    return theta_tri + max(min(1, outside), outside - g.n + 2)


def bounds_report(g: Graph, exact: int | None = None) -> BoundsReport:
    part = edge_triangle_partition(g)
    theta, _ = theta_E(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    lower, upper = opsut_bounds(g)
    return BoundsReport(
        theta_e=theta,
        theta_e_restricted_triangle=theta_tri,
        not_in_triangle_count=len(part.not_in_triangle),
        opsut_lower=lower,
        opsut_upper=upper,
        main_upper=main_upper_bound(g),
        exact=exact,
    )


def triangle_free_k(g: Graph) -> int:
    """Exact competition number of a triangle-free graph: 0 for a single
    vertex, else max(1, m - n + 2), with the floor dropping to 0 when an
    isolated vertex is available."""
    if triangles(g):
        raise ValueError("graph has a triangle")
    if g.n == 1:
        return 0
    if basic_stats(g).isolated_count == 0:
        return max(1, g.m - g.n + 2)
    return max(0, g.m - g.n + 2)


def _triangle_free_tight(g: Graph) -> bool:
    stats = basic_stats(g)
    if g.n < 2:
        return False
    if stats.isolated_count == 0:
        return g.m >= g.n - 1
    return g.m >= g.n - 2


def sufficient_condition(g: Graph) -> bool:
    """True only when tightness is certain: enough edges outside triangles
    and at most opsut_lower isolated vertices (a conservative stand-in for
    "at most k", which is all the hypothesis needs)."""
    part = edge_triangle_partition(g)
    i_g = basic_stats(g).isolated_count
    if len(part.not_in_triangle) < g.n - i_g - 1:
        return False
    lower, _ = opsut_bounds(g)
    return i_g <= lower


def necessary_condition(g: Graph) -> bool:
    """Every tight graph satisfies this; a False return refutes tightness."""
    part = edge_triangle_partition(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    return len(part.not_in_triangle) >= g.n - theta_tri - 2


def classify_one_triangle(g: Graph) -> tuple[int, TightnessVerdict]:
    """Exact competition number and verdict for a connected graph with
    exactly one triangle: k = m - n with a cycle of length >= 4 present
    (the tight case), m - n + 1 otherwise."""
    if not is_connected(g) or len(triangles(g)) != 1:
        raise ValueError("graph must be connected with exactly one triangle")
    if has_cycle_geq4(g):
        return g.m - g.n, TightnessVerdict(
            TIGHT, "one-triangle", "one triangle and a cycle of length >= 4"
        )
    return g.m - g.n + 1, TightnessVerdict(
        NOT_TIGHT, "one-triangle", "one triangle and no cycle of length >= 4"
    )


def classify_two_triangle(g: Graph) -> TightnessVerdict:
    """Partial verdict for a connected graph with exactly two triangles.

    Chordal graphs are never tight here; in the edge-disjoint case fewer
    than two holes also rules tightness out. The remaining cases hinge on
    recognizing a catalog of exceptional two-triangle graphs this library
    does not carry, so they come back needs_exact rather than a guess.
    """
    tri = triangles(g)
    if not is_connected(g) or len(tri) != 2:
        raise ValueError("graph must be connected with exactly two triangles")
    shared = len(set(tri[0]) & set(tri[1])) == 2
    relation = "sharing an edge" if shared else "edge-disjoint"
    theta = g.m - 3 if shared else g.m - 4
    base = f"two triangles {relation}; theta_E = {theta}"
    if is_chordal(g)[0]:
        return TightnessVerdict(NOT_TIGHT, "two-triangle", base + "; chordal")
    if not shared and len(holes(g, cap=2)) < 2:
        return TightnessVerdict(
            NOT_TIGHT, "two-triangle", base + "; fewer than two holes"
        )
    return TightnessVerdict(
        NEEDS_EXACT,
        "two-triangle",
        base + "; needs the exceptional-graph catalog, use exact search",
    )


def is_competitively_tight(
    g: Graph, allow_exact: bool = False, cap: int = DEFAULT_CAP
) -> TightnessVerdict:
    """Decide whether k(g) = theta_E(g) - n + 2.

    Applies the certificate pipeline in a fixed order and returns the first
    decisive verdict; a rule that cannot decide defers to the next. With
    allow_exact the leftover cases run the exact solver (exponential, size
    capped); without it they come back needs_exact.
    """
    tri = triangles(g)

    if not tri:
        if _triangle_free_tight(g):
            return TightnessVerdict(
                TIGHT, "triangle-free", "triangle-free with enough edges"
            )
        return TightnessVerdict(
            NOT_TIGHT, "triangle-free", "triangle-free with too few edges"
        )

    part = edge_triangle_partition(g)
    outside = len(part.not_in_triangle)
    stats = basic_stats(g)
    i_g = stats.isolated_count
    theta, _ = theta_E(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    unfloored = theta - g.n + 2

    if outside >= g.n - i_g - 1 and i_g <= max(0, unfloored):
        return TightnessVerdict(
            TIGHT,
            "sufficient-condition",
            f"{outside} edges outside triangles >= n - i - 1 = {g.n - i_g - 1}",
        )

    if outside < g.n - theta_tri - 2:
        return TightnessVerdict(
            NOT_TIGHT,
            "necessary-condition",
            f"{outside} edges outside triangles < n - {theta_tri} - 2",
        )

    connected = is_connected(g)
    pending = None
    if connected and len(tri) == 1:
        return classify_one_triangle(g)[1]
    if connected and len(tri) == 2:
        verdict = classify_two_triangle(g)
        if verdict.status == NOT_TIGHT:
            return verdict
        pending = verdict

    if unfloored < 0:
        return TightnessVerdict(
            NOT_TIGHT,
            "negative-lower-bound",
            f"theta_E - n + 2 = {unfloored} < 0 can never equal k",
        )
    main = theta_tri + max(min(1, outside), outside - g.n + 2)
    if main == unfloored:
        return TightnessVerdict(
            TIGHT, "bound-sandwich", f"upper and lower bounds meet at {main}"
        )

    if allow_exact:
        k, _ = competition_number_exact(g, cap=cap)
        if k == unfloored:
            return TightnessVerdict(TIGHT, "exact-search", f"k = {k} attains the bound")
        return TightnessVerdict(
            NOT_TIGHT, "exact-search", f"k = {k} != {unfloored}"
        )
    if pending is not None:
        return pending
    return TightnessVerdict(
        NEEDS_EXACT, "undecided", "no certificate applies; rerun with exact search"
    )


def reduce_preserving_tightness(g: Graph):
    """Strip pendant vertices whose component has at least three vertices;
    each such removal keeps both k and theta_E - n unchanged, so tightness
    is preserved exactly, in both directions.

    Pendants of a K_2 component stay: deleting one leaves its neighbor
    isolated and can drop k (two disjoint edges have k = 1, but an edge
    plus an isolated vertex has k = 0), which can flip tightness. Isolated
    vertices also stay put and are only noted in the log."""
    log = []
    cur = g
    while True:
        comps = {v: len(c) for c in connected_components(cur) for v in c}
        target = next(
            (v for v in basic_stats(cur).pendants if comps[v] >= 3), None
        )
        if target is None:
            break
        log.append(("pendant-removed", target))
        cur = remove_vertex(cur, target)
    iso = basic_stats(cur).isolated_count
    if iso:
        log.append(("isolated-kept", iso))
    return cur, log
