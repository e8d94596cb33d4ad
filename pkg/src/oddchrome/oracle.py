"""Exact odd chromatic index by pruned backtracking, and exhaustive
enumeration of small connected subdivisions of odd graphs.

This module is the ground truth the constructive classifier is checked
against, so it shares nothing with it beyond the graph type and the
verifier.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .canon import canonical_form
from .coloring import EdgeColoring, verify_odd
from .errors import BudgetExhausted, GraphInputError, PreconditionError
from .multigraph import MultiGraph
from .sclass import is_in_S

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    max_k: int = 6
    node_budget: int = 10**8
    symmetry: bool = True

    def __post_init__(self):
        if self.max_k < 1:
            raise GraphInputError("max_k must be at least 1")


class SearchResult(NamedTuple):
    status: str                      # found | absent | inconclusive
    coloring: Optional[EdgeColoring]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


class ChiResult(NamedTuple):
    chi: Optional[int]               # None unless found
    coloring: Optional[EdgeColoring]
    status: str                      # found | absent (nothing up to max_k) | inconclusive
    nodes: int


class _Budget(Exception):
    pass


def _edge_order(g: MultiGraph) -> list[int]:
    """Order edges so vertices get closed early.

    Vertices are placed greedily (most edges into the placed set first);
    placing a vertex releases its edges to already placed vertices.
    """
    n = g.n
    placed = [False] * n
    links = [0] * n
    order: list[int] = []
    deg = g.degrees()
    for _ in range(n):
        best = max((v for v in range(n) if not placed[v]), key=lambda v: (links[v], deg[v], -v))
        placed[best] = True
        for e in g.incident(best):
            y = g.other(e, best)
            if placed[y]:
                order.append(e)
            if y != best:
                links[y] += 1
    return order


def search_k(g: MultiGraph, k: int, cfg: SearchConfig = SearchConfig(), cap: Optional[int] = None) -> SearchResult:
    """Find an odd coloring with colors ``1..k`` or prove there is none.

    ``cap`` bounds the size of color class ``k``. Colors are introduced in
    increasing order, which removes the color-permutation symmetry (among
    ``1..k-1`` only when a cap singles out color ``k``).
    """
    if k < 1:
        raise GraphInputError("k must be at least 1")
    if g.m == 0:
        return SearchResult(FOUND, EdgeColoring(g, ()), 0)
    for v in range(g.n):
        inc = g.incident(v)
        if inc and all(g.is_loop(e) for e in inc):
            return SearchResult(ABSENT, None, 0)
    order = _edge_order(g)
    ends = [g.edges[e] for e in order]
    m = len(order)
    links_left = [0] * g.n
    for u, v in g.edges:
        if u != v:
            links_left[u] += 1
            links_left[v] += 1
    cnt = [[0] * (k + 1) for _ in range(g.n)]
    colors = [0] * m
    budget = cfg.node_budget
    nodes = 0
    sym_top = k - 1 if cap is not None else k
    cap_used = 0

    def ok_at(x: int) -> bool:
        row = cnt[x]
        bad = 0
        zero = False
        for c in range(1, k + 1):
            a = row[c]
            if a == 0:
                zero = True
            elif a % 2 == 0:
                bad += 1
        r = links_left[x]
        if bad > r:
            return False
        if (r - bad) % 2 and not zero:
            return False
        return True

    def rec(i: int, used: int) -> bool:
        nonlocal nodes, cap_used
        if i == m:
            return True
        nodes += 1
        if nodes > budget:
            raise _Budget
        u, v = ends[i]
        top = min(used + 1, sym_top) if cfg.symmetry else sym_top
        choices = list(range(1, top + 1))
        if cap is not None and cap_used < cap:
            choices.append(k)
        for c in choices:
            colors[i] = c
            if u == v:
                cnt[u][c] += 2
                good = ok_at(u)
            else:
                cnt[u][c] += 1
                cnt[v][c] += 1
                links_left[u] -= 1
                links_left[v] -= 1
                good = ok_at(u) and ok_at(v)
            if c == k and cap is not None:
                cap_used += 1
            if good and rec(i + 1, max(used, c) if c <= sym_top else used):
                return True
            if c == k and cap is not None:
                cap_used -= 1
            if u == v:
                cnt[u][c] -= 2
            else:
                cnt[u][c] -= 1
                cnt[v][c] -= 1
                links_left[u] += 1
                links_left[v] += 1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, m + 1000))
    try:
        hit = rec(0, 0)
    except _Budget:
        return SearchResult(INCONCLUSIVE, None, nodes)
    finally:
        sys.setrecursionlimit(limit)
    if not hit:
        return SearchResult(ABSENT, None, nodes)
    out = [0] * g.m
    for e, c in zip(order, colors):
        out[e] = c
    col = EdgeColoring(g, tuple(out))
    assert verify_odd(col), "search produced an invalid coloring"
    return SearchResult(FOUND, col, nodes)


def chi(g: MultiGraph, cfg: SearchConfig = SearchConfig()) -> ChiResult:
    """Smallest ``k`` with an odd ``k``-coloring, searched upward from 1."""
    for v in range(g.n):
        inc = g.incident(v)
        if inc and all(g.is_loop(e) for e in inc):
            raise PreconditionError(f"vertex {v} is incident only with loops: not odd edge-colorable")
    if g.m == 0:
        return ChiResult(0, EdgeColoring(g, ()), FOUND, 0)
    total = 0
    for k in range(1, cfg.max_k + 1):
        res = search_k(g, k, cfg)
        total += res.nodes
        if res.status == FOUND:
            return ChiResult(k, res.coloring, FOUND, total)
        if res.status == INCONCLUSIVE:
            return ChiResult(None, None, INCONCLUSIVE, total)
    return ChiResult(None, None, ABSENT, total)


def min_last_class(g: MultiGraph, k: int, max_size: int, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """An odd ``k``-coloring whose color-``k`` class has at most ``max_size`` edges."""
    return search_k(g, k, cfg, cap=max_size)


# -- enumeration --------------------------------------------------------------------


def _in_S_shape(g: MultiGraph) -> bool:
    deg = g.degrees()
    if any(d % 2 == 0 and d != 2 for d in deg):
        return False
    return any(d != 2 for d in deg)


def enumerate_S(max_n: int, max_m: int, hard_limit: int = 10) -> Iterator[MultiGraph]:
    """All connected members of the class with at most ``max_n`` vertices and
    ``max_m`` edges (loops allowed), one per isomorphism type, in canonical
    vertex order, sorted by ``(m, n)`` and canonical key.

    Every connected graph with ``m`` edges is a connected graph with ``m-1``
    edges plus one edge (possibly to a new pendant vertex), so the search
    grows graphs edge by edge and deduplicates by canonical form. A partial
    graph is dropped when its even vertices of degree at least 4 cannot all
    be fixed with the edges still available.
    """
    if max_m > hard_limit:
        raise BudgetExhausted(f"max_m = {max_m} exceeds the enumeration limit {hard_limit}")
    level: dict[tuple, MultiGraph] = {canonical_form(MultiGraph(1)): MultiGraph(1)}
    for m in range(1, max_m + 1):
        left = max_m - m
        nxt: dict[tuple, MultiGraph] = {}
        for g in level.values():
            cands = [(a, b) for a in range(g.n) for b in range(a, g.n)]
            grown = [g.add_edges([(a, b)]) for a, b in cands]
            if g.n < max_n:
                grown += [g.add_edges([(a, g.n)], 1) for a in range(g.n)]
            for h in grown:
                deg = h.degrees()
                stuck = sum(1 for d in deg if d % 2 == 0 and d >= 4)
                if stuck > 2 * left:
                    continue
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = MultiGraph(key[0], key[1])
        level = nxt
        for key in sorted(level):
            h = level[key]
            if _in_S_shape(h):
                assert is_in_S(h), f"shape filter and class test disagree on {h}"
                yield h
