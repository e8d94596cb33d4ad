"""Edge colorings, the odd-coloring verifier, and elementary constructive colorers."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DisconnectedError, GraphInputError, PreconditionError
from .multigraph import MultiGraph, is_odd_graph
from .structure import find_cycle, is_connected, is_forest, spanning_forest
from .tjoin import spanning_odd_coforest


@dataclass(frozen=True)
class EdgeColoring:
    graph: MultiGraph
    colors: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(self.colors)
        object.__setattr__(self, "colors", cols)
        if len(cols) != self.graph.m:
            raise GraphInputError(f"coloring has {len(cols)} entries for {self.graph.m} edges")
        for e, c in enumerate(cols):
            if c is None or int(c) < 1:
                raise GraphInputError(f"edge {e} has no valid color ({c!r})")

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, []).append(e)
        return dict(sorted(out.items()))

    def normalized(self) -> "EdgeColoring":
        """Relabel colors onto 1..k in order of first appearance."""
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return EdgeColoring(self.graph, tuple(relabel[c] for c in self.colors))

    def profile(self) -> "LocalParityProfile":
        return LocalParityProfile.of(self)


class LocalParityProfile(dict):
    """``(vertex, color) -> number of incident edge-ends of that color``."""

    @classmethod
    def of(cls, coloring: EdgeColoring) -> "LocalParityProfile":
        prof = cls()
        for (u, v), c in zip(coloring.graph.edges, coloring.colors):
            prof[(u, c)] = prof.get((u, c), 0) + 1
            prof[(v, c)] = prof.get((v, c), 0) + 1
        return prof

    def at(self, v: int) -> dict[int, int]:
        return {c: k for (x, c), k in self.items() if x == v}


class Verification(NamedTuple):
    ok: bool
    violations: list[tuple[int, int, int]]  # (vertex, color, count)

    def __bool__(self) -> bool:
        return self.ok


def _check(coloring: EdgeColoring, skip: Optional[int]) -> Verification:
    bad = sorted((v, c, k) for (v, c), k in coloring.profile().items() if k % 2 == 0 and v != skip)
    return Verification(not bad, bad)


def verify_odd(coloring: EdgeColoring) -> Verification:
    """Every color appearing at a vertex appears an odd number of times there."""
    return _check(coloring, None)


def verify_odd_away_from(coloring: EdgeColoring, v: int) -> Verification:
    return _check(coloring, v)


def colors_at(g: MultiGraph, colors: Sequence[Optional[int]], v: int) -> Counter:
    cnt: Counter = Counter()
    for e in g.incident(v):
        c = colors[e]
        if c is not None:
            cnt[c] += 2 if g.is_loop(e) else 1
    return cnt


# -- forests --------------------------------------------------------------------------


def _other(c: int, palette: tuple[int, int]) -> int:
    return palette[1] if c == palette[0] else palette[0]


def _extend_forest(g: MultiGraph, forest: Iterable[int], colors: list, roots: Sequence[tuple[int, tuple[int, int]]] = (),
                   default_palette: tuple[int, int] = (1, 2)) -> None:
    """Color the uncolored edges of ``forest`` in place.

    Each listed root has its forest edges colored already; its tree is
    filled top-down from it. Every other tree is rooted at a leaf. Every
    vertex except the listed roots ends up odd in the forest coloring; the
    roots get whatever their precolored edges give them.
    """
    fset = set(forest)
    fadj: dict[int, list[int]] = {}
    for e in fset:
        u, v = g.edges[e]
        fadj.setdefault(u, []).append(e)
        fadj.setdefault(v, []).append(e)
    for lst in fadj.values():
        lst.sort()
    seen: set[int] = set()

    def grow(root: int, palette: tuple[int, int]) -> None:
        seen.add(root)
        queue = deque()
        for e in fadj.get(root, ()):
            y = g.other(e, root)
            if colors[e] is None:
                colors[e] = palette[0]
            seen.add(y)
            queue.append((y, e))
        while queue:
            x, pe = queue.popleft()
            kids = [e for e in fadj[x] if e != pe]
            c = colors[pe]
            cc = _other(c, palette) if len(kids) % 2 else c
            for e in kids:
                colors[e] = cc
                y = g.other(e, x)
                seen.add(y)
                queue.append((y, e))

    for r, pal in roots:
        grow(r, pal)
    for x in sorted(fadj):
        if x in seen:
            continue
        comp = _tree_vertices(g, fadj, x)
        leaf = min(y for y in comp if len(fadj[y]) == 1)
        grow(leaf, default_palette)


def _tree_vertices(g: MultiGraph, fadj: dict[int, list[int]], s: int) -> list[int]:
    out = [s]
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for e in fadj.get(x, ()):
            y = g.other(e, x)
            if y not in seen:
                seen.add(y)
                out.append(y)
                stack.append(y)
    return out


def forest_color2(f: MultiGraph, v: Optional[int] = None, seed: Optional[dict[int, int]] = None) -> EdgeColoring:
    """Extend a coloring of some edges at ``v`` to a 2-coloring of the forest
    ``f`` that is odd away from ``v``.

    Unseeded edges at ``v`` get color 1. With ``v=None`` the result is odd
    everywhere.
    """
    seed = dict(seed or {})
    if not is_forest(f):
        raise PreconditionError("forest_color2 needs an acyclic graph")
    if seed and v is None:
        raise GraphInputError("a seed needs its vertex")
    if set(seed.values()) - {1, 2}:
        raise GraphInputError("seed colors must come from {1, 2}")
    for e in seed:
        if v not in f.edges[e]:
            raise GraphInputError(f"seeded edge {e} is not incident with vertex {v}")
    colors: list = [None] * f.m
    for e, c in seed.items():
        colors[e] = c
    roots = [] if v is None else [(v, (1, 2))]
    _extend_forest(f, range(f.m), colors, roots)
    return EdgeColoring(f, tuple(colors))


def around_vertex_color2(g: MultiGraph, v: int) -> EdgeColoring:
    """2-coloring odd away from ``v`` when ``g - v`` is a forest.

    When ``v`` has odd degree, color 1 is odd and color 2 even at ``v``.
    Built by splitting ``v`` into pendant vertices, coloring the forest,
    and identifying the pendants again.
    """
    if g.loops:
        raise PreconditionError("around_vertex_color2 expects a loopless graph")
    rest = g.delete_vertices([v]).graph
    if not is_forest(rest):
        raise PreconditionError(f"g - {v} is not a forest")
    inc = g.incident(v)
    edges = list(g.edges)
    extra = 0
    for i, e in enumerate(inc):
        if i == 0:
            continue
        a, b = edges[e]
        pend = g.n + extra
        extra += 1
        edges[e] = (pend, b) if a == v else (a, pend)
    split_forest = MultiGraph(g.n + extra, tuple(edges))
    colored = forest_color2(split_forest).colors
    cnt = colors_at(g, colored, v)
    if g.degree(v) % 2 == 1 and cnt.get(1, 0) % 2 == 0:
        colored = tuple(3 - c for c in colored)
    return EdgeColoring(g, colored)


# -- unicyclic graphs -----------------------------------------------------------------------


def _unicyclic_cycle(g: MultiGraph) -> tuple[list[int], list[int]]:
    """``(vertices, edges)`` of the unique cycle; ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[i+1]`` (cyclically)."""
    if not is_connected(g):
        raise DisconnectedError("unicyclic graphs are connected")
    if g.loops:
        raise PreconditionError("loops are not handled by the unicyclic colorer")
    if g.m != g.n:
        raise PreconditionError(f"not unicyclic: n = {g.n}, m = {g.m}")
    cyc = find_cycle(g)
    assert cyc is not None
    if len(cyc) == 2:
        a, b = g.edges[cyc[0]]
        return [a, b], cyc
    first, second = cyc[0], cyc[1]
    shared = set(g.edges[first]) & set(g.edges[second])
    start = g.other(first, next(iter(shared)))
    vs = [start]
    x = start
    for e in cyc:
        x = g.other(e, x)
        vs.append(x)
    assert vs[-1] == start
    return vs[:-1], cyc


def _unicyclic_sets(g: MultiGraph, cyc_vs: list[int]):
    deg = g.degrees()
    two = [x for x in cyc_vs if deg[x] == 2]
    odd = [x for x in cyc_vs if deg[x] % 2 == 1]
    even_big = [x for x in cyc_vs if deg[x] % 2 == 0 and deg[x] != 2]
    return two, odd, even_big


def unicyclic_chi(g: MultiGraph) -> int:
    """2 or 3 for a connected unicyclic graph that is not odd."""
    cyc_vs, _ = _unicyclic_cycle(g)
    if is_odd_graph(g):
        raise PreconditionError("odd unicyclic graphs have odd chromatic index 1")
    two, _, even_big = _unicyclic_sets(g, cyc_vs)
    return 3 if len(two) % 2 == 1 and not even_big else 2


def unicyclic_chi2_special(g: MultiGraph) -> bool:
    cyc_vs, _ = _unicyclic_cycle(g)
    if any(g.degree(x) % 2 == 1 for x in cyc_vs):
        raise PreconditionError("a cycle vertex has odd degree")
    return not (g.m == g.n == len(cyc_vs) and len(cyc_vs) % 2 == 1)


def unicyclic_color(g: MultiGraph) -> EdgeColoring:
    """An odd coloring with ``unicyclic_chi(g)`` colors."""
    chi = unicyclic_chi(g)
    cyc_vs, cyc_es = _unicyclic_cycle(g)
    L = len(cyc_vs)
    deg = g.degrees()
    colors: list = [None] * g.m
    if chi == 2:
        # constraint at cycle vertex: same colors (odd degree), different (2-vertex), free (even >= 4)
        kind = {x: ("free" if deg[x] % 2 == 0 and deg[x] != 2 else "diff" if deg[x] == 2 else "same") for x in cyc_vs}
        start = next((i for i, x in enumerate(cyc_vs) if kind[x] == "free"), 0)
        order = [(start + i) % L for i in range(L)]
        c = 1
        colors[cyc_es[order[0]]] = c
        for i in order[1:]:
            if kind[cyc_vs[i]] == "diff":
                c = 3 - c
            colors[cyc_es[i]] = c
    else:
        for i, e in enumerate(cyc_es):
            colors[e] = 1 + i % 2
        if L % 2:
            colors[cyc_es[-1]] = 3
    cyc_set = set(cyc_es)
    roots = []
    for i, x in enumerate(cyc_vs):
        a, b = colors[cyc_es[i - 1]], colors[cyc_es[i]]
        hang = [e for e in g.incident(x) if e not in cyc_set]
        if not hang:
            continue
        if chi == 2:
            if deg[x] % 2 == 1:
                for e in hang:
                    colors[e] = a
            elif a == b:
                colors[hang[0]] = a
                for e in hang[1:]:
                    colors[e] = 3 - a
            else:
                for e in hang:
                    colors[e] = a
            roots.append((x, (1, 2)))
        else:
            if len(hang) % 2:
                t = ({1, 2, 3} - {a, b}).pop()
                for e in hang:
                    colors[e] = t
                roots.append((x, (t, a)))
            else:
                for e in hang:
                    colors[e] = a
                roots.append((x, (a, b)))
    _extend_forest(g, [e for e in range(g.m) if e not in cyc_set], colors, roots)
    return EdgeColoring(g, tuple(colors))


# -- even order ---------------------------------------------------------------------------------


def even_order_color3(g: MultiGraph, edge_order: Optional[Sequence[int]] = None) -> EdgeColoring:
    """Odd 3-coloring of a connected graph of even order: a spanning odd
    co-forest in color 1, its complement forest 2-colored with {2, 3}.

    ``edge_order`` steers the choice of spanning tree (greedy in that order).
    """
    if not is_connected(g):
        raise DisconnectedError("even_order_color3 needs a connected graph")
    if g.n % 2:
        raise PreconditionError(f"even_order_color3 needs even order, got n = {g.n}")
    h = spanning_odd_coforest(g, None if edge_order is None else spanning_forest(g, edge_order))
    colors: list = [1 if e in h else None for e in range(g.m)]
    _extend_forest(g, [e for e in range(g.m) if e not in h], colors, (), (2, 3))
    return EdgeColoring(g, tuple(colors))


def monochrome(g: MultiGraph) -> EdgeColoring:
    return EdgeColoring(g, (1,) * g.m)
