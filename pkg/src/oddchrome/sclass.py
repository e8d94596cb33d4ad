"""Subdivisions of odd graphs.

A graph is in the class when it arises from an odd graph by subdividing
edges. Its branch vertices are the odd ones; the degree-2 vertices sit on
*threads*, one per edge of the underlying odd graph. A thread of odd
length stands for an even edge (an even number of 2-vertices on it), a
thread of even length for an odd edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring
from .errors import NotInClassError, PreconditionError
from .multigraph import MultiGraph, is_odd_graph, suppress
from .structure import components, is_bipartite


def is_in_S(g: MultiGraph) -> bool:
    """Degrees all odd or exactly 2, and no component made only of 2-vertices."""
    deg = g.degrees()
    if any(d % 2 == 0 and d != 2 for d in deg):
        return False
    return all(any(deg[v] != 2 for v in comp) for comp in components(g))


def is_in_S_by_suppression(g: MultiGraph) -> bool:
    """Suppress 2-vertices (lowest id first) until none is left; test oddness."""
    h = g
    while True:
        cand = [v for v in h.vertices_of_degree(2) if len(h.incident(v)) == 2]
        if not cand:
            return is_odd_graph(h)
        h = suppress(h, cand[0]).graph


@dataclass(frozen=True)
class SubdivisionStructure:
    g: MultiGraph
    g0: MultiGraph
    branch: tuple[int, ...]                # g0 vertex -> G vertex
    threads: tuple[tuple[int, ...], ...]   # g0 edge -> G edge ids, in walking order
    vertex_map: dict                       # G vertex -> ("branch", i) | ("thread", j)

    def is_even(self, e: int) -> bool:
        """A g0 edge is even iff its thread has odd length."""
        return len(self.threads[e]) % 2 == 1

    @property
    def even_edges(self) -> list[int]:
        return [e for e in range(self.g0.m) if self.is_even(e)]

    @property
    def odd_edges(self) -> list[int]:
        return [e for e in range(self.g0.m) if not self.is_even(e)]


def subdivision_structure(g: MultiGraph) -> SubdivisionStructure:
    if not is_in_S(g):
        raise NotInClassError("graph is not a subdivision of an odd graph")
    deg = g.degrees()
    branch = [v for v in range(g.n) if deg[v] % 2 == 1]
    index = {v: i for i, v in enumerate(branch)}
    used = [False] * g.m
    g0_edges = []
    threads = []
    vertex_map: dict = {v: ("branch", i) for i, v in enumerate(branch)}
    for x in branch:
        for e in g.incident(x):
            if used[e]:
                continue
            seq = [e]
            used[e] = True
            prev, cur = e, g.other(e, x)
            while deg[cur] == 2:
                vertex_map[cur] = ("thread", len(threads))
                nxt = next(f for f in g.incident(cur) if f != prev)
                used[nxt] = True
                seq.append(nxt)
                prev, cur = nxt, g.other(nxt, cur)
            g0_edges.append((index[x], index[cur]))
            threads.append(tuple(seq))
    g0 = MultiGraph(len(branch), tuple(g0_edges))
    return SubdivisionStructure(g, g0, tuple(branch), tuple(threads), vertex_map)


@dataclass(frozen=True)
class ParityQuotient:
    h: MultiGraph
    witness: tuple[int, ...]     # g0 vertex -> h vertex
    edge_origin: tuple[int, ...]  # h edge -> g0 edge


def parity_quotient(s: SubdivisionStructure) -> ParityQuotient:
    """Contract every component of ``g0 - odd edges``; odd edges survive."""
    parent = list(range(s.g0.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in s.even_edges:
        a, b = s.g0.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(x) for x in range(s.g0.n)})
    rid = {r: i for i, r in enumerate(roots)}
    witness = tuple(rid[find(x)] for x in range(s.g0.n))
    odd = s.odd_edges
    h = MultiGraph(len(roots), tuple((witness[s.g0.edges[e][0]], witness[s.g0.edges[e][1]]) for e in odd))
    return ParityQuotient(h, witness, tuple(odd))


def chi_le_2(g: MultiGraph) -> bool:
    """Odd 2-edge-colorability inside the class: the parity quotient is bipartite."""
    return is_bipartite(parity_quotient(subdivision_structure(g)).h)[0]


def color2(g: MultiGraph) -> EdgeColoring:
    """Odd 2-coloring from a bipartition of the parity quotient.

    Every branch vertex takes the color of its side; each thread then
    alternates from the color of its first end, which lands on the right
    color at the far end exactly because the quotient is bipartite.
    """
    s = subdivision_structure(g)
    if not g.vertices_of_degree(2):
        raise PreconditionError("graph has no 2-vertex (it is odd and needs one color)")
    q = parity_quotient(s)
    ok, side = is_bipartite(q.h)
    if not ok:
        raise PreconditionError("parity quotient is not bipartite; no odd 2-coloring exists")
    colors = [0] * g.m
    for e, thread in enumerate(s.threads):
        start = 1 + side[q.witness[s.g0.edges[e][0]]]
        for i, f in enumerate(thread):
            colors[f] = start if i % 2 == 0 else 3 - start
    return EdgeColoring(g, tuple(colors))
