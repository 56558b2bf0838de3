#!/usr/bin/env python3
"""Times the hot kernels on both backends and prints the speedup.

Workloads: the exact sweep over every 6-vertex graph class, clique cover
optimization on the structured families, and realization searches around
the feasibility boundary. Run after `pip install -e .`; without the
compiled extension only the pure-Python column is reported.
"""

import time

from compnum import (
    _backend,
    circulant,
    complete_bipartite,
    decide_k,
    enumerate_graphs,
    g_tn,
    theta_E,
)
from compnum.solver import competition_number_exact


def workload_sweep():
    for g in REPS6:
        competition_number_exact(g)


def workload_theta():
    for g in THETA_INPUTS:
        theta_E(g)


def workload_decide():
    decide_k(circulant(7, 2), 2)
    assert decide_k(circulant(7, 2), 1) is None
    competition_number_exact(complete_bipartite(3, 3))
    competition_number_exact(circulant(8, 2))


REPS6 = list(enumerate_graphs(6, dedup=True))
THETA_INPUTS = [g_tn(3, 2), g_tn(4, 2), g_tn(6, 2), circulant(9, 3), circulant(12, 4)]

WORKLOADS = [
    ("exact k, all 156 six-vertex classes", workload_sweep, 3),
    ("theta_E on structured families", workload_theta, 5),
    ("realization search boundary cases", workload_decide, 3),
]


def run(backend):
    _backend.activate(backend)
    results = []
    for name, fn, repeats in WORKLOADS:
        best = min(_timed(fn) for _ in range(repeats))
        results.append((name, best))
    return results


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    print(f"compiled kernels available: {_backend.compiled_available()}")
    pure = run("python")
    if not _backend.compiled_available():
        for name, t in pure:
            print(f"{name:45s} python {t * 1000:8.1f} ms")
        return
    fast = run("compiled")
    _backend.activate("compiled")
    print(f"{'workload':45s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for (name, tp), (_, tc) in zip(pure, fast):
        print(
            f"{name:45s} {tp * 1000:8.1f}ms {tc * 1000:8.1f}ms "
            f"{tp / max(tc, 1e-9):7.1f}x"
        )


if __name__ == "__main__":
    main()
