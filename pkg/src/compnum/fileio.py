"""Plain-text graph formats.

Edge lists: a ``p <n> <m>`` header, then m lines ``e <u> <v>`` with
1-indexed endpoints. Digraphs: ``d <n> <a>``, then ``a <u> <v>`` arcs and a
``c topo: ...`` trailer. Lines starting with ``c`` are comments; fields are
whitespace-separated and CRLF input is fine.
"""

from __future__ import annotations

from .errors import MalformedInputError
from .graphs import Digraph, Graph


def write_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    n = None
    expected = 0
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedInputError(f"line {lineno}: duplicate p line")
            if len(parts) != 3:
                raise MalformedInputError(f"line {lineno}: p line needs 'p <n> <m>'")
            n, expected = _ints(parts[1:], lineno)
            if n < 0 or expected < 0:
                raise MalformedInputError(f"line {lineno}: negative count")
        elif parts[0] == "e":
            if n is None:
                raise MalformedInputError(f"line {lineno}: edge before p line")
            if len(parts) != 3:
                raise MalformedInputError(f"line {lineno}: e line needs 'e <u> <v>'")
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedInputError(
                    f"line {lineno}: endpoint out of range 1..{n}"
                )
            if u == v:
                raise MalformedInputError(f"line {lineno}: loop at vertex {u}")
            pairs.append((u - 1, v - 1))
        else:
            raise MalformedInputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise MalformedInputError("missing p line")
    if len(pairs) != expected:
        raise MalformedInputError(
            f"header promised {expected} edges, file has {len(pairs)}"
        )
    return Graph(n, pairs)


def write_digraph(d: Digraph, topo=None) -> str:
    lines = [f"d {d.n} {len(d.arcs)}"]
    lines += [f"a {u + 1} {v + 1}" for u, v in sorted(d.arcs)]
    if topo is not None:
        lines.append("c topo: " + " ".join(str(v + 1) for v in topo))
    return "\n".join(lines) + "\n"


def read_digraph(text: str):
    """Parse a digraph file back; returns (digraph, topo order or None)."""
    n = None
    expected = 0
    arcs = []
    topo = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            if len(parts) >= 2 and parts[1] == "topo:":
                topo = [x - 1 for x in _ints(parts[2:], lineno)]
            continue
        if parts[0] == "d":
            if len(parts) != 3:
                raise MalformedInputError(f"line {lineno}: d line needs 'd <n> <a>'")
            n, expected = _ints(parts[1:], lineno)
        elif parts[0] == "a":
            if n is None:
                raise MalformedInputError(f"line {lineno}: arc before d line")
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedInputError(f"line {lineno}: endpoint out of range")
            arcs.append((u - 1, v - 1))
        else:
            raise MalformedInputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise MalformedInputError("missing d line")
    if len(arcs) != expected:
        raise MalformedInputError(
            f"header promised {expected} arcs, file has {len(arcs)}"
        )
    return Digraph(n, arcs), topo


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedInputError(f"line {lineno}: expected integers") from exc
