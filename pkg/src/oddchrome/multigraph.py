"""Undirected multigraphs with stable edge identities.

Vertices are ``0..n-1``. Edges are stored as an ordered tuple of endpoint
pairs; the position of an edge is its id. Loops and parallel edges are
allowed everywhere. Values are immutable: every operation that changes the
graph returns a new :class:`MultiGraph`, together with the maps needed to
follow vertices and edges back to the parent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import GraphInputError, PreconditionError

Edge = tuple[int, int]
EdgeSubset = frozenset  # of edge ids of a host graph


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise GraphInputError(f"negative vertex count {self.n}")
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphInputError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)

    # -- incidence ---------------------------------------------------------

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} outside 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        """Number of edge-ends at ``v``; a loop counts twice."""
        self._check_vertex(v)
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids incident with ``v``, ascending. A loop is listed once."""
        self._check_vertex(v)
        return self._incidence[v]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if u == v:
            return w
        if w == v:
            return u
        raise GraphInputError(f"edge {e} is not incident with vertex {v}")

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` (``v`` itself if it carries a loop)."""
        seen = {self.other(e, v) for e in self.incident(v)}
        return sorted(seen)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(i for i, (u, v) in enumerate(self.edges) if u == v)

    @property
    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self._degrees, default=0)

    def vertices_of_degree(self, d: int) -> list[int]:
        return [v for v, k in enumerate(self._degrees) if k == d]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per vertex, a list of ``(edge_id, other_end)``. Loops appear once."""
        return [[(e, self.other(e, v)) for e in self._incidence[v]] for v in range(self.n)]

    # -- derived graphs ------------------------------------------------------

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Derived":
        """Spanning subgraph on the given edges (vertex ids unchanged)."""
        keep = sorted(set(edge_ids))
        for e in keep:
            if not 0 <= e < self.m:
                raise GraphInputError(f"edge id {e} outside 0..{self.m - 1}")
        g = MultiGraph(self.n, tuple(self.edges[e] for e in keep))
        return Derived(g, {v: v for v in range(self.n)}, tuple(keep))

    def delete_edges(self, edge_ids: Iterable[int]) -> "Derived":
        drop = set(edge_ids)
        return self.edge_subgraph(e for e in range(self.m) if e not in drop)

    def induced(self, vertices: Iterable[int]) -> "Derived":
        """Induced subgraph; vertices renumbered in ascending order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        vmap = {v: i for i, v in enumerate(vs)}
        keep = [e for e, (u, w) in enumerate(self.edges) if u in vmap and w in vmap]
        g = MultiGraph(len(vs), tuple((vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in keep))
        return Derived(g, vmap, tuple(keep))

    def delete_vertices(self, vertices: Iterable[int]) -> "Derived":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def without_loops(self) -> "Derived":
        return self.delete_edges(self.loops)

    def add_edges(self, new_edges: Iterable[Edge], extra_vertices: int = 0) -> "MultiGraph":
        return MultiGraph(self.n + extra_vertices, self.edges + tuple(new_edges))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "MultiGraph":
        """Apply the vertex permutation ``v -> perm[v]``; edge ids unchanged."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabel needs a permutation of the vertex set")
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def edge_multiset(self) -> list[Edge]:
        return sorted((min(u, v), max(u, v)) for u, v in self.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, edges={list(self.edges)})"


class Derived(NamedTuple):
    """A graph derived from a parent, with provenance maps.

    ``vmap`` sends surviving parent vertices to new ids. ``emap[i]`` is the
    parent id of new edge ``i``, or ``-1`` for an edge created by the
    operation.
    """

    graph: MultiGraph
    vmap: dict[int, int]
    emap: tuple[int, ...]


@dataclass(frozen=True)
class Bouquet:
    u: int
    v: int
    edge_ids: frozenset = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.edge_ids)


def degree(g: MultiGraph, v: int) -> int:
    return g.degree(v)


def bouquet(g: MultiGraph, u: int, v: int) -> Bouquet:
    """All parallel ``u``-``v`` edges (possibly none)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphInputError("a bouquet joins two distinct vertices; loops are not bouquets")
    ids = frozenset(e for e in g.incident(u) if g.other(e, u) == v)
    return Bouquet(u, v, ids)


def multiplicity(g: MultiGraph) -> int:
    counts: dict[Edge, int] = {}
    for u, v in g.edges:
        if u != v:
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
    return max(counts.values(), default=0)


def is_odd_graph(g: MultiGraph) -> bool:
    return all(d % 2 == 1 for d in g.degrees())


def is_even_graph(g: MultiGraph) -> bool:
    return all(d % 2 == 0 for d in g.degrees())


def suppress(g: MultiGraph, v: int) -> Derived:
    """Replace the 2-vertex ``v`` by an edge joining its neighbours.

    The new edge is the last edge of the result (``emap`` entry ``-1``); it is
    a loop when both edges of ``v`` go to the same neighbour.
    """
    if g.degree(v) != 2:
        raise PreconditionError(f"vertex {v} has degree {g.degree(v)}, suppression needs degree 2")
    inc = g.incident(v)
    if len(inc) != 2:
        raise PreconditionError(f"vertex {v} has degree 2 via a loop and cannot be suppressed")
    a, b = (g.other(e, v) for e in inc)
    rest = g.delete_vertices([v])
    vm = rest.vmap
    new = rest.graph.add_edges([(vm[a], vm[b])])
    return Derived(new, vm, rest.emap + (-1,))


def subdivide(g: MultiGraph, e: int, times: int = 1) -> Derived:
    """Insert ``times`` new 2-vertices on edge ``e``.

    Edge ``e`` keeps its id (now the first segment); new segments are
    appended, new vertices get ids ``n, n+1, ...``.
    """
    if times < 0:
        raise GraphInputError("cannot subdivide a negative number of times")
    if times == 0:
        return Derived(g, {v: v for v in range(g.n)}, tuple(range(g.m)))
    u, w = g.edges[e]
    chain = [u] + list(range(g.n, g.n + times)) + [w]
    edges = list(g.edges)
    edges[e] = (chain[0], chain[1])
    extra = [(chain[i], chain[i + 1]) for i in range(1, len(chain) - 1)]
    new = MultiGraph(g.n + times, tuple(edges) + tuple(extra))
    return Derived(new, {v: v for v in range(g.n)}, tuple(range(g.m)) + (-1,) * times)


def split(g: MultiGraph, v: int, partition: tuple[Iterable[int], Iterable[int]]) -> MultiGraph:
    """Split ``v`` into ``v`` (first part) and a new vertex ``n`` (second part).

    ``partition`` must cover every edge at ``v`` exactly once; a loop moves
    whole to the side it is assigned to. Edge ids are preserved.
    """
    first, second = (set(p) for p in partition)
    inc = set(g.incident(v))
    if first & second or first | second != inc:
        raise GraphInputError(f"partition does not cover the edges at vertex {v} exactly once")
    new_v = g.n
    edges = list(g.edges)
    for e in second:
        a, b = edges[e]
        edges[e] = (new_v if a == v else a, new_v if b == v else b)
    return MultiGraph(g.n + 1, tuple(edges))


def identify(g: MultiGraph, a: int, b: int) -> Derived:
    """Merge vertex ``b`` into ``a``; ids above ``b`` shift down by one."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        return Derived(g, {v: v for v in range(g.n)}, tuple(range(g.m)))
    vmap = {}
    for x in range(g.n):
        y = a if x == b else x
        vmap[x] = y - (1 if y > b else 0)
    edges = tuple((vmap[u], vmap[w]) for u, w in g.edges)
    return Derived(MultiGraph(g.n - 1, edges), vmap, tuple(range(g.m)))


def edge_complement(g: MultiGraph, h: Iterable[int]) -> frozenset:
    hs = frozenset(h)
    bad = [e for e in hs if not 0 <= e < g.m]
    if bad:
        raise GraphInputError(f"edge ids {sorted(bad)} are not edges of the host")
    return frozenset(range(g.m)) - hs


def symmetric_difference(a: Iterable[int], b: Iterable[int]) -> frozenset:
    return frozenset(a) ^ frozenset(b)


def subset_degrees(g: MultiGraph, edge_ids: Iterable[int]) -> list[int]:
    """Degree of every vertex in the spanning subgraph on ``edge_ids``."""
    deg = [0] * g.n
    for e in edge_ids:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    n = 0
    edges: list[Edge] = []
    for h in graphs:
        edges.extend((u + n, v + n) for u, v in h.edges)
        n += h.n
    return MultiGraph(n, tuple(edges))
