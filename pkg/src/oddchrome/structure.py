"""Connectivity, blocks, bridges, bipartiteness, small edge cuts and cycles.

Every traversal walks edge ids rather than endpoint pairs, so a parallel
edge is never confused with the tree edge it duplicates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import DisconnectedError, PreconditionError
from .multigraph import Derived, MultiGraph


# -- connectivity -------------------------------------------------------------


def components(g: MultiGraph, removed_edges: Iterable[int] = (), removed_vertices: Iterable[int] = ()) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    gone_e = set(removed_edges)
    gone_v = set(removed_vertices)
    seen = [False] * g.n
    for v in gone_v:
        seen[v] = True
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                if e in gone_e:
                    continue
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def component_index(g: MultiGraph, removed_edges: Iterable[int] = ()) -> list[int]:
    idx = [0] * g.n
    for i, comp in enumerate(components(g, removed_edges)):
        for v in comp:
            idx[v] = i
    return idx


def is_connected(g: MultiGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# -- blocks ---------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a graph and the block-cutpoint incidences.

    Each loop forms a singleton block of its own (``loop_block``); loops
    never create cut-vertices.
    """

    blocks: tuple[frozenset, ...]
    vertices: tuple[frozenset, ...]
    cut_vertices: frozenset
    bcp_edges: tuple[tuple[int, int], ...]
    loop_block: tuple[bool, ...]

    def internal(self, i: int) -> frozenset:
        return self.vertices[i] - self.cut_vertices

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, vs in enumerate(self.vertices) if v in vs and not self.loop_block[i]]


def blocks(g: MultiGraph) -> BlockDecomposition:
    adj = g.adjacency()
    disc = [-1] * g.n
    low = [0] * g.n
    t = 0
    edge_stack: list[int] = []
    found: list[list[int]] = []
    loop_blocks: list[int] = []
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == pe:
                    continue
                if w == v:
                    loop_blocks.append(e)
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp = []
                    while True:
                        x = edge_stack.pop()
                        comp.append(x)
                        if x == pe:
                            break
                    found.append(comp)
    block_sets = [frozenset(b) for b in found] + [frozenset([e]) for e in sorted(loop_blocks)]
    is_loop = [False] * len(found) + [True] * len(loop_blocks)
    order = sorted(range(len(block_sets)), key=lambda i: (is_loop[i], min(block_sets[i])))
    block_sets = [block_sets[i] for i in order]
    is_loop = [is_loop[i] for i in order]
    vsets = []
    for b in block_sets:
        vs = set()
        for e in b:
            vs.update(g.edges[e])
        vsets.append(frozenset(vs))
    count = [0] * g.n
    for b, vs, lp in zip(block_sets, vsets, is_loop):
        if not lp:
            for v in vs:
                count[v] += 1
    cuts = frozenset(v for v in range(g.n) if count[v] >= 2)
    bcp = tuple((v, i) for i, vs in enumerate(vsets) if not is_loop[i] for v in sorted(vs) if v in cuts)
    return BlockDecomposition(tuple(block_sets), tuple(vsets), cuts, bcp, tuple(is_loop))


def cut_vertices(g: MultiGraph) -> frozenset:
    return blocks(g).cut_vertices


def is_two_connected(g: MultiGraph) -> bool:
    """Connected, at least one edge on two or more vertices, no cut-vertex.

    A doubled edge and a single edge both qualify; see :func:`is_trivial_block`.
    """
    if g.n < 2 or g.m == 0 or not is_connected(g):
        return False
    return not cut_vertices(g)


def is_trivial_block(g: MultiGraph) -> bool:
    return g.n == 2 and g.m == 1


def block_graph(g: MultiGraph, dec: BlockDecomposition, i: int) -> Derived:
    """Block ``i`` as a standalone graph on its own vertices."""
    vs = sorted(dec.vertices[i])
    vmap = {v: k for k, v in enumerate(vs)}
    eids = sorted(dec.blocks[i])
    h = MultiGraph(len(vs), tuple((vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in eids))
    return Derived(h, vmap, tuple(eids))


# -- bridges, cuts -------------------------------------------------------------------


def bridges(g: MultiGraph, removed_edges: Iterable[int] = ()) -> frozenset:
    """Edges whose removal increases the number of components."""
    gone = set(removed_edges)
    disc = [-1] * g.n
    low = [0] * g.n
    t = 0
    out = set()
    adj = g.adjacency()
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == pe or e in gone or w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    out.add(pe)
    return frozenset(out)


def edge_connectivity_at_most(g: MultiGraph, k: int) -> Optional[frozenset]:
    """A disconnecting edge set of size at most ``k`` (1 or 2), if any.

    A disconnected graph, or one with fewer than two vertices, returns the
    empty set.
    """
    if k not in (1, 2):
        raise PreconditionError("only k = 1 and k = 2 are supported")
    if g.n < 2 or not is_connected(g):
        return frozenset()
    br = bridges(g)
    if br:
        return frozenset([min(br)])
    if k == 1:
        return None
    for f1 in range(g.m):
        if g.is_loop(f1):
            continue
        br = bridges(g, [f1])
        if br:
            return frozenset([f1, min(br)])
    return None


@dataclass(frozen=True)
class TwoEdgeCut:
    edges: tuple[int, int]
    side: frozenset
    other_side: frozenset

    @property
    def nontrivial(self) -> bool:
        return len(self.side) >= 2 and len(self.other_side) >= 2


def two_edge_cuts(g: MultiGraph) -> Iterator[TwoEdgeCut]:
    """Every edge pair ``f1 < f2`` forming an edge cut ``[X, X̄]``, lexicographically."""
    if not is_connected(g):
        raise DisconnectedError("two-edge cuts are defined for connected graphs")
    base_bridges = bridges(g)
    for f1 in range(g.m):
        if g.is_loop(f1):
            continue
        cand = sorted(e for e in bridges(g, [f1]) if e > f1 and e not in base_bridges)
        if f1 in base_bridges:
            continue
        for f2 in cand:
            comps = components(g, [f1, f2])
            if len(comps) != 2:
                continue
            side = frozenset(comps[0])
            if all((g.edges[f][0] in side) != (g.edges[f][1] in side) for f in (f1, f2)):
                yield TwoEdgeCut((f1, f2), side, frozenset(comps[1]))


def nontrivial_two_edge_cut(g: MultiGraph) -> Optional[TwoEdgeCut]:
    """The lexicographically first 2-edge cut with at least two vertices per side."""
    for cut in two_edge_cuts(g):
        if cut.nontrivial:
            return cut
    return None


def is_essentially_3_edge_connected(g: MultiGraph) -> bool:
    return nontrivial_two_edge_cut(g) is None


# -- bipartiteness, forests, cycles ------------------------------------------------------


def is_bipartite(g: MultiGraph) -> tuple[bool, Optional[list[int]]]:
    """``(True, side)`` with ``side[v]`` in {0, 1}, or ``(False, None)``.

    A loop is an odd closed walk, so any loop makes the graph non-bipartite.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in g.incident(x):
                y = g.other(e, x)
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, None
    return True, side


def spanning_forest(g: MultiGraph, edge_order: Optional[Iterable[int]] = None) -> frozenset:
    """Edge ids of a spanning forest, chosen greedily in ``edge_order``."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = []
    for e in (range(g.m) if edge_order is None else edge_order):
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            out.append(e)
    return frozenset(out)


def is_forest(g: MultiGraph, edge_ids: Optional[Iterable[int]] = None) -> bool:
    ids = range(g.m) if edge_ids is None else list(edge_ids)
    ids = list(ids)
    return len(spanning_forest(g, ids)) == len(ids)


def find_cycle(g: MultiGraph, edge_ids: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """Edge ids of some cycle inside ``edge_ids`` (all edges by default), or None."""
    ids = list(range(g.m) if edge_ids is None else edge_ids)
    for e in ids:
        if g.is_loop(e):
            return [e]
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree_adj: dict[int, list[tuple[int, int]]] = {}
    for e in ids:
        a, b = g.edges[e]
        ra, rb = find(a), find(b)
        if ra == rb:
            path = _tree_path(tree_adj, a, b)
            return path + [e]
        parent[ra] = rb
        tree_adj.setdefault(a, []).append((e, b))
        tree_adj.setdefault(b, []).append((e, a))
    return None


def _tree_path(tree_adj: dict[int, list[tuple[int, int]]], a: int, b: int) -> list[int]:
    prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for e, y in tree_adj.get(x, ()):
            if y not in prev:
                prev[y] = (e, x)
                queue.append(y)
    path = []
    x = b
    while x != a:
        e, x = prev[x]
        path.append(e)
    return path[::-1]


def path_between(g: MultiGraph, a: int, b: int, allowed: Optional[set] = None,
                 edge_ids: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """Shortest ``a``-``b`` path (edge ids) through vertices in ``allowed``."""
    usable = None if edge_ids is None else set(edge_ids)
    prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            path = []
            while x != a:
                e, x = prev[x]
                path.append(e)
            return path[::-1]
        for e in g.incident(x):
            if usable is not None and e not in usable:
                continue
            y = g.other(e, x)
            if y in prev or (allowed is not None and y not in allowed and y != b):
                continue
            prev[y] = (e, x)
            queue.append(y)
    return None


def iter_cycles_through(g: MultiGraph, s: int) -> Iterator[tuple[list[int], list[int]]]:
    """All simple cycles through ``s`` as ``(vertices, edges)``, depth first.

    Each cycle is produced once per direction of traversal.
    """
    for e in g.incident(s):
        if g.is_loop(e):
            yield [s], [e]
    on_path = {s}
    vpath = [s]
    epath: list[int] = []
    adj = g.adjacency()

    def extend(x: int) -> Iterator[tuple[list[int], list[int]]]:
        for e, y in adj[x]:
            if y == x or (epath and e == epath[-1]):
                continue
            if y == s and epath:
                yield list(vpath), epath + [e]
            elif y not in on_path:
                on_path.add(y)
                vpath.append(y)
                epath.append(e)
                yield from extend(y)
                epath.pop()
                vpath.pop()
                on_path.discard(y)

    yield from extend(s)


def cycle_through(g: MultiGraph, required: Iterable[int], min_order: int = 1) -> Optional[list[int]]:
    """Edge sequence of a simple cycle containing ``required`` with at least
    ``min_order`` vertices, or None."""
    req = sorted(set(required))
    if len(req) > 2:
        raise PreconditionError("at most two required vertices are supported")
    starts = req[:1] if req else range(g.n)
    for s in starts:
        for vs, es in iter_cycles_through(g, s):
            if len(vs) >= min_order and all(r in vs for r in req):
                return es
    return None


def lobes(g: MultiGraph, v: int) -> list[Derived]:
    """The ``v``-lobes of ``g``; loops at ``v`` go with the first lobe."""
    rest = components(g, removed_vertices=[v])
    base = components(g)
    comp_of_v = next(c for c in base if v in c)
    parts = [c for c in rest if set(c) <= set(comp_of_v)]
    if len(parts) < 2:
        raise PreconditionError(f"vertex {v} is not a cut-vertex")
    out = []
    for i, part in enumerate(parts):
        pset = set(part)
        eids = [e for e, (a, b) in enumerate(g.edges) if a in pset or b in pset]
        if i == 0:
            eids += [e for e in g.incident(v) if g.is_loop(e)]
        vs = sorted(pset | {v})
        vmap = {x: k for k, x in enumerate(vs)}
        eids.sort()
        h = MultiGraph(len(vs), tuple((vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in eids))
        out.append(Derived(h, vmap, tuple(eids)))
    return out
