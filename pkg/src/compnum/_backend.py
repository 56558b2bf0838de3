"""Backend selection for the search kernels.

The compiled Cython kernels are used when the extension imported cleanly
and the instance fits in 64-bit masks; anything larger, or an environment
with COMPNUM_PURE_PYTHON set, runs the pure-Python fallback. Both backends
produce identical witnesses.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_FORCE_PURE = os.environ.get("COMPNUM_PURE_PYTHON", "") not in ("", "0")
_active = _kernels_py if (_compiled is None or _FORCE_PURE) else _compiled


def compiled_available() -> bool:
    return _compiled is not None


def active_name() -> str:
    return "compiled" if _active is _compiled else "python"


def activate(name: str) -> None:
    """Force a backend ("compiled" or "python"); used by benchmarks/tests."""
    global _active
    if name == "python":
        _active = _kernels_py
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


def maximal_clique_masks(n, adj):
    impl = _active if n <= 63 else _kernels_py
    return impl.maximal_clique_masks(n, list(adj))


def min_edge_clique_cover(cover_masks, target, budget):
    impl = _active if target.bit_length() <= 63 else _kernels_py
    return impl.min_edge_clique_cover(list(cover_masks), target, budget)


def search_realization(n, adj, k, m, pair_bit, cand_masks, cand_cover):
    # the memo key packs the placed-vertex mask above the covered-edge mask
    impl = _active if n + m <= 63 else _kernels_py
    return impl.search_realization(
        n, list(adj), k, m, list(pair_bit), list(cand_masks), list(cand_cover)
    )
