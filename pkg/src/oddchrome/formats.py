"""Text formats: MEL edge lists, graph6 import, coloring files, DOT export.

MEL (multigraph edge list)::

    # comment lines start with '#'; blank lines are ignored
    n 3
    e 0 1
    e 1 1

Edge ids follow line order. graph6 decoding is delegated to networkx and
covers simple graphs only.
"""

from __future__ import annotations

from typing import Optional

import networkx as nx

from .coloring import EdgeColoring
from .errors import GraphInputError
from .multigraph import MultiGraph

# DOT palette for colors 1..6
PALETTE = {1: "red", 2: "blue", 3: "green", 4: "orange", 5: "purple", 6: "brown"}


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_mel(text: str) -> MultiGraph:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            if n is not None:
                raise GraphInputError(f"line {lineno}: second header line")
            n = _int(parts[1], lineno)
            if n < 0:
                raise GraphInputError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e" and len(parts) == 3:
            if n is None:
                raise GraphInputError(f"line {lineno}: edge line before the 'n <N>' header")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"line {lineno}: endpoint outside 0..{n - 1}")
            edges.append((u, v))
        else:
            raise GraphInputError(f"line {lineno}: cannot parse {line!r}")
    if n is None:
        raise GraphInputError("missing 'n <N>' header")
    return MultiGraph(n, tuple(edges))


def serialize_mel(g: MultiGraph, comment: Optional[str] = None) -> str:
    lines = [f"# {c}" for c in (comment.splitlines() if comment else [])]
    lines.append(f"n {g.n}")
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> MultiGraph:
    """One simple graph in graph6 (an optional ``>>graph6<<`` header is accepted)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if data.startswith(":") or data.startswith(">>sparse6<<"):
        raise GraphInputError("unsupported format: sparse6 (multigraphs) is not read; use MEL for multigraphs")
    if data.startswith("&") or data.startswith(">>digraph6<<"):
        raise GraphInputError("unsupported format: digraph6")
    if not data or "\n" in data:
        raise GraphInputError("expected exactly one graph6 line")
    if any(not 63 <= ord(ch) <= 126 for ch in data):
        raise GraphInputError("not graph6: characters outside the printable range 63..126")
    try:
        h = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphInputError(f"not graph6: {exc}") from None
    return MultiGraph(h.number_of_nodes(), tuple(sorted((min(u, v), max(u, v)) for u, v in h.edges())))


def parse_colors(text: str, g: MultiGraph) -> EdgeColoring:
    """Lines ``<edge_id> <color>`` (or ``<edge_id> <u> <v> <color>``), one per edge."""
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (2, 4):
            raise GraphInputError(f"line {lineno}: expected '<edge_id> <color>'")
        e, c = _int(parts[0], lineno), _int(parts[-1], lineno)
        if not 0 <= e < g.m:
            raise GraphInputError(f"line {lineno}: edge id {e} outside 0..{g.m - 1}")
        if len(parts) == 4:
            ends = (_int(parts[1], lineno), _int(parts[2], lineno))
            if sorted(ends) != sorted(g.edges[e]):
                raise GraphInputError(f"line {lineno}: edge {e} has endpoints {g.edges[e]}, not {ends}")
        if e in colors:
            raise GraphInputError(f"line {lineno}: edge {e} colored twice")
        if c < 1:
            raise GraphInputError(f"line {lineno}: colors are positive integers")
        colors[e] = c
    missing = [e for e in range(g.m) if e not in colors]
    if missing:
        raise GraphInputError(f"no color for edges {missing[:10]}")
    return EdgeColoring(g, tuple(colors[e] for e in range(g.m)))


def format_coloring(g: MultiGraph, colors, edge_ids=None) -> str:
    """Lines ``<edge_id> <u> <v> <color>`` in edge id order."""
    ids = range(g.m) if edge_ids is None else edge_ids
    return "".join(f"{i} {u} {v} {c}\n" for i, (u, v), c in zip(ids, g.edges, colors))


def emit_dot(g: MultiGraph, coloring: Optional[EdgeColoring] = None) -> str:
    if coloring is not None and coloring.graph != g:
        raise GraphInputError("coloring belongs to a different graph")
    out = ["graph G {"]
    out += [f"  {v};" for v in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        attr = f'label="{e}"'
        if coloring is not None:
            c = coloring.colors[e]
            attr += f", color={PALETTE.get(c, 'black')}"
        out.append(f"  {u} -- {v} [{attr}];")
    out.append("}")
    return "\n".join(out) + "\n"
