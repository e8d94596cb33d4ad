"""T-joins: spanning subgraphs whose odd-degree vertices are exactly T.

All constructions start from a spanning forest. Inside a tree the T-join
is unique: a tree edge belongs to it iff the subtree below the edge holds an
odd number of T-vertices. Adding every non-forest edge first and repairing
parity inside the forest gives a T-join whose complement lies in the
forest, i.e. a co-forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DisconnectedError, PreconditionError
from .multigraph import MultiGraph, subset_degrees
from .structure import components, cut_vertices, is_connected, spanning_forest


@dataclass(frozen=True)
class TJoinSpec:
    host: MultiGraph
    T: frozenset

    def __init__(self, host: MultiGraph, T: Iterable[int]):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "T", frozenset(T))


def t_join_exists(spec: TJoinSpec) -> bool:
    return all(len(spec.T.intersection(c)) % 2 == 0 for c in components(spec.host))


def is_t_join(g: MultiGraph, edge_ids: Iterable[int], T: Iterable[int]) -> bool:
    Ts = set(T)
    deg = subset_degrees(g, edge_ids)
    return all((deg[v] % 2 == 1) == (v in Ts) for v in range(g.n))


def _forest_join(g: MultiGraph, forest: Iterable[int], T: Iterable[int]) -> set[int]:
    """The unique T-join inside the given spanning forest."""
    fset = set(forest)
    odd = [False] * g.n
    for v in T:
        odd[v] = not odd[v]
    seen = [False] * g.n
    out: set[int] = set()
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        order = [root]
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in g.incident(x):
                if e not in fset:
                    continue
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    parent_edge[y] = e
                    order.append(y)
                    queue.append(y)
        for x in reversed(order):
            pe = parent_edge[x]
            if pe >= 0 and odd[x]:
                out.add(pe)
                p = g.other(pe, x)
                odd[p] = not odd[p]
                odd[x] = False
        if odd[root]:
            raise PreconditionError("T meets some component in an odd number of vertices")
    return out


def _require_feasible(spec: TJoinSpec) -> None:
    if not t_join_exists(spec):
        raise PreconditionError("no T-join exists: T meets some component in an odd number of vertices")


def t_join_forest(spec: TJoinSpec) -> frozenset:
    """A T-join that is a forest."""
    _require_feasible(spec)
    g = spec.host
    return frozenset(_forest_join(g, spanning_forest(g), spec.T))


def _coforest_join(g: MultiGraph, forest: frozenset, T: frozenset) -> frozenset:
    cotree = [e for e in range(g.m) if e not in forest]
    deg = subset_degrees(g, cotree)
    fix = set(T) ^ {v for v in range(g.n) if deg[v] % 2 == 1}
    return frozenset(cotree) | frozenset(_forest_join(g, forest, fix))


def t_join_coforest(spec: TJoinSpec, forest: Optional[frozenset] = None) -> frozenset:
    """A T-join whose edge-complement is a forest.

    ``forest`` optionally fixes the spanning forest that must contain the
    complement.
    """
    _require_feasible(spec)
    g = spec.host
    return _coforest_join(g, spanning_forest(g) if forest is None else forest, spec.T)


def spanning_odd_coforest(g: MultiGraph, forest: Optional[frozenset] = None) -> frozenset:
    """Edges of a spanning subgraph, odd at every vertex, with acyclic complement."""
    if not is_connected(g):
        raise DisconnectedError("a spanning odd co-forest is built for connected graphs")
    if g.n % 2:
        raise PreconditionError(f"a spanning odd subgraph needs even order, got n = {g.n}")
    return t_join_coforest(TJoinSpec(g, range(g.n)), forest)


def coforest_avoiding_vertex(g: MultiGraph, v: int, e: int, T: Iterable[int]) -> frozenset:
    """A co-forest T-join ``H`` whose complement meets ``v`` in at most ``e``.

    The complement is confined to a spanning tree in which ``v`` is a leaf
    hanging on ``e``: a spanning tree of ``g - v`` plus ``e``. That tree
    exists exactly because ``v`` is not a cut-vertex.
    """
    Ts = frozenset(T)
    if not is_connected(g):
        raise DisconnectedError("coforest_avoiding_vertex needs a connected graph")
    if e not in g.incident(v) or g.is_loop(e):
        raise PreconditionError(f"edge {e} is not a link at vertex {v}")
    if v in cut_vertices(g):
        raise PreconditionError(f"vertex {v} is a cut-vertex, not an internal vertex")
    if len(Ts) % 2:
        raise PreconditionError("T must have even size")
    at_v = set(g.incident(v))
    order = [f for f in range(g.m) if f not in at_v] + [e]
    tree = spanning_forest(g, order)
    if len(tree) != g.n - 1:
        raise PreconditionError(f"removing vertex {v} disconnects the graph")
    h = _coforest_join(g, tree, Ts)
    assert all(f == e for f in at_v - h)
    return h
