"""Constructive odd 3-coloring for 2-connected, essentially 3-edge-connected
class members with a single 2-vertex ``v``, bipartite suppression, and both
maximum degree and order at least 5.

Two routes, tried per cycle ``C`` through ``v``:

* cycle-pair witness: a cycle ``C'`` meeting ``C`` in exactly one vertex.
  ``C + C'`` is a connected even subgraph of even order containing ``v``;
  an odd factor of it in color 1, the rest of it in color 2 and everything
  else in color 3 is an odd coloring.
* augmentation: grow ``H = C + B`` (``B`` an odd bouquet of size >= 3 on
  ``P = C - v``) outward along ``P`` until every vertex of degree >= 3 in
  ``H`` is saturated, then color ``H`` with colors 1, 2 and one edge of 3,
  and the rest of the graph with 3.

Any structural assumption that fails at runtime raises
:class:`ConstructionDivergence` for that cycle; the next cycle is tried.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from .coloring import EdgeColoring, verify_odd
from .errors import ConstructionDivergence, PreconditionError
from .multigraph import MultiGraph, is_odd_graph, suppress
from .structure import (components, is_bipartite, is_connected, is_essentially_3_edge_connected,
                        is_two_connected, iter_cycles_through, path_between)
from .tjoin import TJoinSpec, t_join_forest

log = logging.getLogger(__name__)

WITNESS = "cycle-pair"
AUGMENT = "augmentation"


def augmentation_problem(g: MultiGraph) -> Optional[str]:
    """None when ``g`` meets the preconditions, else the first one that fails."""
    if g.loops:
        return "graph has loops"
    if not is_connected(g) or not is_two_connected(g):
        return "graph is not 2-connected"
    twos = g.vertices_of_degree(2)
    if len(twos) != 1:
        return f"graph has {len(twos)} vertices of degree 2, not exactly one"
    if g.max_degree < 5:
        return f"maximum degree {g.max_degree} is below 5"
    if g.n < 5:
        return f"order {g.n} is below 5"
    v = twos[0]
    if len(set(g.neighbors(v))) != 2:
        return "the 2-vertex has a repeated neighbour"
    h = suppress(g, v).graph
    if not (is_odd_graph(h) and is_two_connected(h) and is_bipartite(h)[0]):
        return "suppressing the 2-vertex does not give a 2-connected bipartite odd graph"
    if not is_essentially_3_edge_connected(g):
        return "graph has a nontrivial 2-edge-cut"
    return None


# -- cycle-pair witness ---------------------------------------------------------------------


def cycle_pair(g: MultiGraph, cycle_vs: list[int], cycle_es: list[int]) -> Optional[list[int]]:
    """Edges of a cycle meeting the given cycle in exactly one vertex."""
    on_c = set(cycle_vs)
    c_edges = set(cycle_es)
    comp = {}
    for i, vs in enumerate(components(g, removed_vertices=on_c)):
        for x in vs:
            comp[x] = i
    for x in cycle_vs:
        seen: dict[int, tuple[int, int]] = {}
        for e in g.incident(x):
            if e in c_edges:
                continue
            y = g.other(e, x)
            if y in on_c:
                continue
            if comp[y] in seen:
                e0, y0 = seen[comp[y]]
                inside = {t for t, k in comp.items() if k == comp[y]}
                mid = path_between(g, y0, y, allowed=inside)
                assert mid is not None
                return [e0] + mid + [e]
            seen[comp[y]] = (e, y)
    return None


def color_from_even_subgraph(g: MultiGraph, h_edges: set[int]) -> EdgeColoring:
    """Odd factor of ``H`` in 1, rest of ``H`` in 2, complement in 3.

    Valid when ``H`` is an even subgraph whose components have even order
    and every vertex outside a 2-vertex covered by ``H`` has odd degree.
    """
    sub = g.edge_subgraph(h_edges)
    touched = {x for e in h_edges for x in g.edges[e]}
    factor = t_join_forest(TJoinSpec(sub.graph, touched))
    in_factor = {sub.emap[i] for i in factor}
    colors = tuple(1 if e in in_factor else 2 if e in h_edges else 3 for e in range(g.m))
    return EdgeColoring(g, colors)


# -- augmentation -------------------------------------------------------------------------------


class _Augmenter:
    def __init__(self, g: MultiGraph, v: int, cycle_vs: list[int], cycle_es: list[int]):
        self.g = g
        self.v = v
        # cycle_vs = [v, x1, ..., xk]; cycle_es[0] = v x1, cycle_es[i] = x_i x_{i+1}, last = xk v
        self.P = cycle_vs[1:]
        self.pe = cycle_es[1:-1]          # pe[i] joins P[i] and P[i+1]
        self.uv, self.vw = cycle_es[0], cycle_es[-1]
        self.pos = {x: i for i, x in enumerate(self.P)}
        self.H: set[int] = set(cycle_es)
        self.deg_h = [0] * g.n
        for e in cycle_es:
            a, b = g.edges[e]
            self.deg_h[a] += 1
            self.deg_h[b] += 1
        self.bouquets: list[tuple[int, int, list[int]]] = []   # (x, p, extra edges)
        self.paths: list[tuple[int, int, list[int]]] = []      # (x, ending, edges from x)

    def _add(self, edges) -> None:
        for e in edges:
            if e in self.H:
                raise ConstructionDivergence(f"edge {e} absorbed twice")
            self.H.add(e)
            a, b = self.g.edges[e]
            self.deg_h[a] += 1
            self.deg_h[b] += 1

    def _h_vertices(self) -> set[int]:
        return {x for e in self.H for x in self.g.edges[e]}

    def odd_large_bouquet(self) -> tuple[int, int]:
        g, P = self.g, self.P
        for i in range(len(P) - 1):
            a, b = P[i], P[i + 1]
            size = sum(1 for e in g.incident(a) if g.other(e, a) == b)
            if size >= 3 and size % 2 == 1:
                if i == 0 or i + 1 == len(P) - 1:
                    raise ConstructionDivergence("odd large bouquet touches a neighbour of the 2-vertex")
                return i, i + 1
        raise ConstructionDivergence("no odd large bouquet along the path")

    def run_side(self, start: int, direction: int) -> list[int]:
        g, P, pos = self.g, self.P, self.pos
        stack = [start]
        x = start
        while True:
            rem = [e for e in g.incident(x) if e not in self.H]
            if not rem:
                return stack
            j = pos[x] + direction
            if not 0 <= j < len(P):
                raise ConstructionDivergence(f"stack ran off the end of the path at {x}")
            if len(rem) > 1:
                p = P[j]
                if any(g.other(e, x) != p for e in rem):
                    raise ConstructionDivergence(f"unsaturated edges at {x} are not a bouquet to its path neighbour")
                self._add(rem)
                self.bouquets.append((x, p, rem))
                stack.append(p)
                x = p
                continue
            e = rem[0]
            y = g.other(e, x)
            if y in pos:
                if (pos[y] - pos[x]) * direction <= 0:
                    raise ConstructionDivergence(f"chord at {x} points the wrong way")
                path, end = [e], y
            else:
                path, end = self._detour(x, e, y, direction)
            lo, hi = sorted((pos[x], pos[end]))
            if any(self.deg_h[P[i]] != 2 for i in range(lo + 1, hi)):
                raise ConstructionDivergence("a skipped path vertex is already saturated")
            self._add(path)
            self.paths.append((x, end, path))
            stack.append(end)
            x = end

    def _detour(self, x: int, e: int, y: int, direction: int) -> tuple[list[int], int]:
        """A path ``x e y ... t`` through vertices off ``H`` ending on the path
        side given by ``direction``, ending as close to ``x`` as possible."""
        g, pos = self.g, self.pos
        used = self._h_vertices() | {self.v}
        if y in used:
            raise ConstructionDivergence(f"detour from {x} starts inside H")
        comp = {y}
        stack = [y]
        while stack:
            a = stack.pop()
            for f in g.incident(a):
                b = g.other(f, a)
                if b not in comp and b not in used and b not in pos:
                    comp.add(b)
                    stack.append(b)
        best = None
        for a in comp:
            for f in g.incident(a):
                if f == e:
                    continue
                t = g.other(f, a)
                if t in pos and (pos[t] - pos[x]) * direction > 0:
                    key = abs(pos[t] - pos[x])
                    if best is None or key < best[0]:
                        best = (key, a, f, t)
        if best is None:
            raise ConstructionDivergence(f"no detour from {x} reaches the path on the required side")
        _, a, f, t = best
        mid = path_between(g, y, a, allowed=comp)
        assert mid is not None
        return [e] + mid + [f], t

    def color(self, zi: int, zbi: int, stack_z: list[int], stack_zb: list[int]) -> EdgeColoring:
        g, P, pe = self.g, self.P, self.pe
        repeat = (set(stack_z) | set(stack_zb)) - {P[zi], P[zbi]}
        colors: list = [None] * g.m
        colors[self.uv] = 1
        colors[self.vw] = 2
        colors[pe[zi]] = 3
        cur = 1
        for i in range(zi):
            cur = cur if P[i] in repeat else 3 - cur
            colors[pe[i]] = cur
        cur = 2
        for i in range(len(P) - 1, zbi, -1):
            cur = cur if P[i] in repeat else 3 - cur
            colors[pe[i - 1]] = cur
        bz = [e for e in g.incident(P[zi]) if g.other(e, P[zi]) == P[zbi] and e != pe[zi]]
        for i, e in enumerate(bz):
            colors[e] = 1 if i == 0 else 2
        for x, p, extra in self.bouquets:
            c = colors[pe[min(self.pos[x], self.pos[p])]]
            for e in extra:
                colors[e] = c
        for x, end, path in self.paths:
            step = 1 if self.pos[end] > self.pos[x] else -1
            c = colors[pe[self.pos[x] if step == 1 else self.pos[x] - 1]]
            for e in path:
                colors[e] = c
                c = 3 - c
        for e in range(g.m):
            if colors[e] is None:
                if e in self.H:
                    raise ConstructionDivergence(f"edge {e} of H left uncolored")
                colors[e] = 3
        return EdgeColoring(g, tuple(colors))

    def run(self) -> EdgeColoring:
        g = self.g
        zi, zbi = self.odd_large_bouquet()
        z, zb = self.P[zi], self.P[zbi]
        self._add([e for e in g.incident(z) if g.other(e, z) == zb and e != self.pe[zi]])
        stack_z = self.run_side(z, -1)
        stack_zb = self.run_side(zb, +1)
        stacked = set(stack_z) | set(stack_zb)
        for x in self._h_vertices():
            if x in stacked:
                if self.deg_h[x] != g.degree(x):
                    raise ConstructionDivergence(f"stack vertex {x} is not saturated")
            elif self.deg_h[x] != 2:
                raise ConstructionDivergence(f"vertex {x} has degree {self.deg_h[x]} in H")
        col = self.color(zi, zbi, stack_z, stack_zb)
        check = verify_odd(col)
        if not check:
            raise ConstructionDivergence(f"coloring of H fails at {check.violations[:3]}")
        return col


def _cycles(g: MultiGraph, v: int, limit: int) -> Iterator[tuple[list[int], list[int]]]:
    for count, (vs, es) in enumerate(iter_cycles_through(g, v)):
        if count >= limit:
            return
        yield vs, es


def color3_traced(g: MultiGraph, cycle_limit: int = 2000) -> tuple[EdgeColoring, str]:
    """Odd 3-coloring plus the route that produced it."""
    problem = augmentation_problem(g)
    if problem is not None:
        raise PreconditionError(problem)
    v = g.vertices_of_degree(2)[0]
    reasons = []
    for vs, es in _cycles(g, v, cycle_limit):
        pair = cycle_pair(g, vs, es)
        if pair is not None:
            col = color_from_even_subgraph(g, set(es) | set(pair))
            if verify_odd(col):
                return col, WITNESS
            reasons.append("cycle-pair coloring failed to verify")
            continue
        if len(vs) < 5:
            continue
        try:
            return _Augmenter(g, v, vs, es).run(), AUGMENT
        except ConstructionDivergence as exc:
            reasons.append(str(exc))
            log.info("augmentation diverged on cycle %s: %s", vs, exc)
    raise ConstructionDivergence("no cycle through the 2-vertex worked: " + "; ".join(sorted(set(reasons))[:5]))


def color3_via_augmentation(g: MultiGraph) -> EdgeColoring:
    return color3_traced(g)[0]
