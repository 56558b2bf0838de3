"""Command-line front end.

Subcommands: ``compute`` (bounds, verdict and optional exact value for one
graph file), ``generate`` (write a family member as an edge list),
``realize`` (write a witness digraph), ``verify`` (run the property suites
over every small graph up to isomorphism).

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from multiprocessing import Pool

from . import families, fileio
from .errors import MalformedInputError, UnsupportedSizeError
from .graphs import (
    Graph,
    basic_stats,
    connected_components,
    edge_triangle_partition,
    is_chordal,
    is_connected,
    remove_vertex,
    triangles,
)
from .cliques import theta_E, theta_E_restricted
from .solver import (
    competition_number_exact,
    decide_k,
    verify_realization,
)
from .tightness import (
    NEEDS_EXACT,
    NOT_TIGHT,
    TIGHT,
    classify_one_triangle,
    classify_two_triangle,
    is_competitively_tight,
    main_upper_bound,
    necessary_condition,
    opsut_bounds,
    sufficient_condition,
    triangle_free_k,
)

ALL_CHECKS = (
    "opsut",
    "main",
    "ecc",
    "trianglefree",
    "onetriangle",
    "twotriangle",
    "tight",
    "isolatedlaw",
    "pendantlaw",
)
EXACT_CHECKS = frozenset(ALL_CHECKS) - {"ecc"}


@dataclass(frozen=True)
class Report:
    """Everything ``compute`` knows about one input graph."""

    input: str
    n: int
    m: int
    theta_e: int
    theta_e_restricted_triangle: int
    not_in_triangle_count: int
    opsut_lower: int
    opsut_upper: int
    main_upper: int
    exact: int | None
    status: str
    rule: str
    detail: str
    theta_e_witness: list
    realization_file: str | None
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        data["theta_e_witness"] = [list(c) for c in data["theta_e_witness"]]
        return cls(**data)


def _warn_cap(cap: int) -> None:
    if cap > 12:
        print(
            f"warning: cap {cap} above the default 12; exact search cost "
            "grows exponentially",
            file=sys.stderr,
        )


def cmd_compute(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        g = fileio.read_edge_list(fh.read())
    _warn_cap(args.cap)
    t0 = time.perf_counter()
    theta, cover = theta_E(g)
    part = edge_triangle_partition(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    outside = len(part.not_in_triangle)
    exact = None
    real_file = None
    if args.exact:
        exact, real = competition_number_exact(g, cap=args.cap)
        real_file = args.input + ".digraph"
        with open(real_file, "w", encoding="utf-8") as fh:
            fh.write(fileio.write_digraph(real.digraph, real.topo_order))
    verdict = is_competitively_tight(g, allow_exact=args.exact, cap=args.cap)
    lower, upper = opsut_bounds(g)
    report = Report(
        input=args.input,
        n=g.n,
        m=g.m,
        theta_e=theta,
        theta_e_restricted_triangle=theta_tri,
        not_in_triangle_count=outside,
        opsut_lower=lower,
        opsut_upper=upper,
        main_upper=main_upper_bound(g),
        exact=exact,
        status=verdict.status,
        rule=verdict.rule,
        detail=verdict.detail,
        theta_e_witness=[sorted(c) for c in cover.cliques],
        realization_file=real_file,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"input: {report.input} (n={report.n}, m={report.m})")
        print(f"theta_E: {report.theta_e}")
        print(
            f"bounds: {report.opsut_lower} <= k <= {report.main_upper}"
            f" (theta_E bound {report.opsut_upper})"
        )
        if report.exact is not None:
            print(f"exact k: {report.exact} (witness in {report.realization_file})")
        print(f"verdict: {report.status} [{report.rule}] {report.detail}")
    return 0


_FAMILIES = {
    "complete": (families.complete, ("n",)),
    "edgeless": (families.edgeless, ("n",)),
    "cycle": (families.cycle, ("n",)),
    "path": (families.path, ("n",)),
    "bipartite": (families.complete_bipartite, ("a", "b")),
    "path_plus_clique": (families.path_plus_clique, ("n", "m")),
    "gtn": (families.g_tn, ("t", "n")),
    "circulant": (families.circulant, ("n", "p")),
}


def cmd_generate(args) -> int:
    builder, needed = _FAMILIES[args.family]
    values = []
    for name in needed:
        value = getattr(args, name)
        if value is None:
            raise MalformedInputError(
                f"family {args.family} needs --{name}"
            )
        values.append(value)
    g = builder(*values)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(fileio.write_edge_list(g))
    print(f"wrote {args.out} (n={g.n}, m={g.m})")
    return 0


def cmd_realize(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        g = fileio.read_edge_list(fh.read())
    _warn_cap(args.cap)
    if args.k is not None:
        real = decide_k(g, args.k, cap=args.cap)
        if real is None:
            raise MalformedInputError(
                f"no realization with k = {args.k}; the exact value is larger"
            )
    else:
        _, real = competition_number_exact(g, cap=args.cap)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(fileio.write_digraph(real.digraph, real.topo_order))
    ok = verify_realization(g, real)
    print(f"wrote {args.out} (extra={real.extra}); verification: {'OK' if ok else 'FAIL'}")
    return 0 if ok else 1


def _analyze(task):
    """Per-graph record for the verify harness; runs in worker processes."""
    n, edges, with_exact = task
    g = Graph(n, edges)
    theta, cover = theta_E(g)
    part = edge_triangle_partition(g)
    theta_tri, _ = theta_E_restricted(part.in_triangle, g)
    lower, _ = opsut_bounds(g)
    record = {
        "n": n,
        "edges": edges,
        "theta": theta,
        "theta_tri": theta_tri,
        "outside": len(part.not_in_triangle),
        "main": main_upper_bound(g),
        "lower": lower,
        "tri": len(triangles(g)),
        "connected": is_connected(g),
        "witness_ok": cover.validate(),
    }
    if with_exact:
        k, real = competition_number_exact(g)
        record["k"] = k
        record["tight"] = k == theta - g.n + 2
        record["witness_ok"] = record["witness_ok"] and verify_realization(g, real)
    return record


def _records(max_n: int, jobs: int, with_exact: bool):
    tasks = []
    for n in range(1, max_n + 1):
        for g in families.enumerate_graphs(n, dedup=True):
            tasks.append((n, tuple(g.edge_list()), with_exact))
    if jobs > 1:
        with Pool(jobs) as pool:
            return pool.map(_analyze, tasks, chunksize=8)
    return [_analyze(t) for t in tasks]


def _edge_text(rec):
    return fileio.write_edge_list(Graph(rec["n"], rec["edges"])).replace("\n", " ")


def _check_opsut(records):
    return [r for r in records if not r["lower"] <= r["k"] <= r["theta"]]


def _check_main(records):
    return [
        r
        for r in records
        if not (r["lower"] <= r["main"] <= r["theta"] and r["k"] <= r["main"])
    ]


def _check_ecc(records):
    return [r for r in records if r["theta"] != r["theta_tri"] + r["outside"]]


def _check_trianglefree(records):
    bad = []
    for r in records:
        if r["tri"]:
            continue
        g = Graph(r["n"], r["edges"])
        verdict = is_competitively_tight(g)
        if triangle_free_k(g) != r["k"] or (verdict.status == TIGHT) != r["tight"]:
            bad.append(r)
    return bad


def _check_onetriangle(records):
    bad = []
    for r in records:
        if r["tri"] != 1 or not r["connected"]:
            continue
        value, verdict = classify_one_triangle(Graph(r["n"], r["edges"]))
        if value != r["k"] or (verdict.status == TIGHT) != r["tight"]:
            bad.append(r)
    return bad


def _check_twotriangle(records):
    bad = []
    for r in records:
        if r["tri"] != 2 or not r["connected"]:
            continue
        g = Graph(r["n"], r["edges"])
        tri = triangles(g)
        shared = len(set(tri[0]) & set(tri[1])) == 2
        base = g.m - g.n
        allowed = {base, base - 1} if shared else {base, base - 1, base - 2}
        verdict = classify_two_triangle(g)
        if (
            r["k"] not in allowed
            or (is_chordal(g)[0] and r["tight"])
            or (verdict.status != NEEDS_EXACT and (verdict.status == TIGHT) != r["tight"])
        ):
            bad.append(r)
    return bad


def _check_tight(records):
    bad = []
    census = {}
    for r in records:
        verdict = is_competitively_tight(Graph(r["n"], r["edges"]))
        if verdict.status == TIGHT and not r["tight"]:
            bad.append(r)
        if verdict.status == NOT_TIGHT and r["tight"]:
            bad.append(r)
        if sufficient_condition(Graph(r["n"], r["edges"])) and not r["tight"]:
            bad.append(r)
        if not necessary_condition(Graph(r["n"], r["edges"])) and r["tight"]:
            bad.append(r)
        if r["tight"]:
            census[r["n"]] = census.get(r["n"], 0) + 1
    for n in sorted(census):
        print(f"  census: n={n} tight classes = {census[n]}")
    return bad


def _check_isolatedlaw(records):
    bad = []
    for r in records:
        if r["n"] > 5:
            continue
        g = Graph(r["n"], r["edges"])
        for t in range(4):
            bigger = Graph(g.n + t, g.edges)
            k, _ = competition_number_exact(bigger)
            if k != max(0, r["k"] - t):
                bad.append(r)
                break
    return bad


def _check_pendantlaw(records):
    # deleting a pendant leaves k unchanged unless the pendant's component
    # is a bare edge (deleting one of those leaves its neighbor isolated
    # and k may drop: two disjoint edges have k = 1, edge plus isolated
    # vertex has k = 0), so K_2 components are excluded here
    bad = []
    for r in records:
        g = Graph(r["n"], r["edges"])
        comps = {v: len(c) for c in connected_components(g) for v in c}
        for v in basic_stats(g).pendants:
            if comps[v] < 3:
                continue
            k, _ = competition_number_exact(remove_vertex(g, v))
            if k != r["k"]:
                bad.append(r)
                break
    return bad


_CHECKS = {
    "opsut": _check_opsut,
    "main": _check_main,
    "ecc": _check_ecc,
    "trianglefree": _check_trianglefree,
    "onetriangle": _check_onetriangle,
    "twotriangle": _check_twotriangle,
    "tight": _check_tight,
    "isolatedlaw": _check_isolatedlaw,
    "pendantlaw": _check_pendantlaw,
}


def cmd_verify(args) -> int:
    checks = ALL_CHECKS if args.checks is None else tuple(args.checks.split(","))
    for name in checks:
        if name not in _CHECKS:
            raise MalformedInputError(f"unknown check {name!r}")
        if args.max_n > 6 and name in EXACT_CHECKS:
            raise UnsupportedSizeError(
                f"check {name!r} needs exact solves and supports max-n <= 6"
            )
    if args.max_n > 7:
        raise UnsupportedSizeError("verify supports max-n <= 7")
    with_exact = any(name in EXACT_CHECKS for name in checks)
    records = _records(args.max_n, args.jobs, with_exact)
    print(f"analyzed {len(records)} graph classes up to n = {args.max_n}")
    bad_witness = [r for r in records if not r["witness_ok"]]
    failed = False
    if bad_witness:
        failed = True
        print(f"witnesses: {len(bad_witness)} invalid, first: {_edge_text(bad_witness[0])}")
    for name in checks:
        bad = _CHECKS[name](records)
        line = f"check {name}: {len(bad)} failures over {len(records)} classes"
        if bad:
            failed = True
            line += f"; first counterexample: {_edge_text(bad[0])}"
        print(line)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compnum",
        description="Competition numbers, clique covers and tightness of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="bounds and verdict for one graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--exact", action="store_true", help="also run the exact solver")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=12, help="exact-search size cap (n+k)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a family member as an edge list")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="property suites over all small graphs")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--checks", help="comma-separated subset of: " + ",".join(ALL_CHECKS))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", help="write a witness digraph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, help="target k (default: exact minimum)")
    p.add_argument("--cap", type=int, default=12)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MalformedInputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())
