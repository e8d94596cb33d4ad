"""Odd chromatic index of connected subdivisions of odd graphs, with
optimal colorings and four-color witnesses.

Decision ladder for a connected class member ``g`` (loops removed first;
a loop never changes the answer, it just takes a color already odd at its
vertex):

* 0 colors for an edgeless graph, 1 for an odd graph;
* 2 when the parity quotient is bipartite;
* 4 when every block is a 2-connected family member and every cut-vertex
  has odd degree in exactly one of its blocks;
* 3 otherwise.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import augmentation
from .coloring import EdgeColoring, colors_at, even_order_color3, monochrome, verify_odd
from .errors import BudgetExhausted, ConstructionDivergence, DisconnectedError, NotInClassError, PreconditionError
from .family import is_in_F
from .multigraph import MultiGraph
from .oracle import ABSENT, FOUND, SearchConfig, search_k
from .sclass import chi_le_2, color2, is_in_S
from .structure import block_graph, blocks, bridges, components, cut_vertices, is_connected, is_two_connected

log = logging.getLogger(__name__)

EMPTY = "empty"
ODD = "odd"
QUOTIENT_BIPARTITE = "quotient-bipartite"
FAMILY_F = "family-F"
OTHERWISE = "otherwise"

# color3 strategies, in the order they are tried
EVEN_ORDER = "even-order"
BRIDGE = "bridge"
ADJACENT_TWOS = "adjacent-2-vertices"
AUGMENTATION = "augmentation"
TREE_RETRY = "tree-retry"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class ChiReport:
    chi: int
    case_tag: str
    coloring: EdgeColoring
    witness_edge: Optional[int] = None


# -- domain and loops -------------------------------------------------------------------


def _check_domain(g: MultiGraph) -> None:
    if g.n > 1 and not is_connected(g):
        raise DisconnectedError("input graph is not connected")
    if g.m and not is_in_S(g):
        raise NotInClassError("input graph is not a subdivision of an odd graph (some degree is even and not 2)")


def _loopless(g: MultiGraph) -> tuple[MultiGraph, tuple[int, ...]]:
    d = g.without_loops()
    return d.graph, d.emap


def _lift(g: MultiGraph, emap: tuple[int, ...], colors: tuple[int, ...]) -> EdgeColoring:
    """Colors of the loopless core back on ``g``; each loop copies a color
    that is already odd at its vertex."""
    out: list = [None] * g.m
    for i, e in enumerate(emap):
        out[e] = colors[i]
    for e in g.loops:
        x = g.edges[e][0]
        present = colors_at(g, out, x)
        if not present:
            raise PreconditionError(f"vertex {x} carries only loops and cannot be odd-colored")
        out[e] = min(present)
    return EdgeColoring(g, tuple(out))


# -- the decision -------------------------------------------------------------------------


def block_degree(g: MultiGraph, block_edges, v: int) -> int:
    return sum((2 if g.is_loop(e) else 1) for e in g.incident(v) if e in block_edges)


def is_in_S4_block(b: MultiGraph) -> bool:
    return is_two_connected(b) and is_in_S(b) and is_in_F(b)


def _needs_four(h: MultiGraph) -> bool:
    dec = blocks(h)
    for i in range(len(dec.blocks)):
        if dec.loop_block[i]:
            continue
        if not is_in_S4_block(block_graph(h, dec, i).graph):
            return False
    for v in dec.cut_vertices:
        odd = sum(1 for i in dec.blocks_at(v) if block_degree(h, dec.blocks[i], v) % 2 == 1)
        if odd != 1:
            return False
    return True


def _decide(h: MultiGraph) -> tuple[int, str]:
    if h.m == 0:
        return 0, EMPTY
    if not h.vertices_of_degree(2):
        return 1, ODD
    if chi_le_2(h):
        return 2, QUOTIENT_BIPARTITE
    if _needs_four(h):
        return 4, FAMILY_F
    return 3, OTHERWISE


def chi_of(g: MultiGraph) -> int:
    """The odd chromatic index only, without building a coloring."""
    _check_domain(g)
    return _decide(_loopless(g)[0])[0]


# -- three colors ---------------------------------------------------------------------------


def _verified(h: MultiGraph, colors) -> Optional[tuple[int, ...]]:
    col = EdgeColoring(h, tuple(colors))
    return col.colors if verify_odd(col) and col.k <= 3 else None


def _by_even_order(h: MultiGraph) -> Optional[tuple[int, ...]]:
    if h.n % 2:
        return None
    return _verified(h, even_order_color3(h).colors)


def _by_bridge(h: MultiGraph) -> Optional[tuple[int, ...]]:
    """Split at a bridge: the even side alone, the odd side with the bridge
    hanging off it (even order again), then permute colors on the even side
    so the bridge color is missing there at the bridge end."""
    if h.n % 2 == 0:
        return None
    bs = sorted(bridges(h))
    if not bs:
        return None
    b = bs[0]
    x, y = h.edges[b]
    side_x = next(c for c in components(h, removed_edges=[b]) if x in c)
    if len(side_x) % 2 == 0:
        even_side, a, odd_side = side_x, x, [t for t in range(h.n) if t not in set(side_x)]
    else:
        even_side, a, odd_side = [t for t in range(h.n) if t not in set(side_x)], y, side_x
    colors: list = [None] * h.m
    odd_part = h.induced(list(odd_side) + [a])
    for i, c in enumerate(even_order_color3(odd_part.graph).colors):
        colors[odd_part.emap[i]] = c
    even_part = h.induced(even_side)
    ev = even_order_color3(even_part.graph)
    at_a = set(colors_at(even_part.graph, ev.colors, even_part.vmap[a]))
    c = colors[b]
    swap = {}
    if c in at_a:
        t = min({1, 2, 3} - at_a)
        swap = {c: t, t: c}
    for i, k in enumerate(ev.colors):
        colors[even_part.emap[i]] = swap.get(k, k)
    return _verified(h, colors)


def _by_adjacent_twos(h: MultiGraph) -> Optional[tuple[int, ...]]:
    """Drop an edge joining two 2-vertices, color the rest (now with
    pendant vertices), then give the edge the color missing at both ends."""
    deg = h.degrees()
    for f, (x, y) in enumerate(h.edges):
        if x == y or deg[x] != 2 or deg[y] != 2:
            continue
        rest = h.delete_edges([f])
        if not is_connected(rest.graph):
            continue
        sub = _by_bridge(rest.graph)
        if sub is None:
            continue
        colors: list = [None] * h.m
        for i, c in enumerate(sub):
            colors[rest.emap[i]] = c
        used = set(colors_at(h, colors, x)) | set(colors_at(h, colors, y))
        colors[f] = min({1, 2, 3} - used)
        return _verified(h, colors)
    return None


def _by_augmentation(h: MultiGraph) -> Optional[tuple[int, ...]]:
    if augmentation.augmentation_problem(h) is not None:
        return None
    try:
        return _verified(h, augmentation.color3_via_augmentation(h).colors)
    except ConstructionDivergence as exc:
        log.warning("augmentation diverged, falling through: %s", exc)
        return None


def _by_tree_retry(h: MultiGraph, tries: int = 24) -> Optional[tuple[int, ...]]:
    """Delete an internal 2-vertex ``v``, 3-color the even-order rest, and
    put ``v`` back with two colors missing at its two neighbours. Retries
    with shuffled spanning trees when the missing colors clash."""
    if h.n % 2 == 0:
        return None
    cuts = cut_vertices(h)
    for v in h.vertices_of_degree(2):
        inc = h.incident(v)
        if v in cuts or len(inc) != 2:
            continue
        e, f = inc
        u, w = h.other(e, v), h.other(f, v)
        if u == w:
            continue
        rest = h.delete_vertices([v])
        rng = random.Random(v)
        order = list(range(rest.graph.m))
        for attempt in range(tries):
            if attempt:
                rng.shuffle(order)
            col = even_order_color3(rest.graph, None if attempt == 0 else order).colors
            colors: list = [None] * h.m
            for i, c in enumerate(col):
                colors[rest.emap[i]] = c
            miss_u = sorted({1, 2, 3} - set(colors_at(h, colors, u)))
            miss_w = sorted({1, 2, 3} - set(colors_at(h, colors, w)))
            pair = next(((a, b) for a in miss_u for b in miss_w if a != b), None)
            if pair is None:
                continue
            colors[e], colors[f] = pair
            out = _verified(h, colors)
            if out is not None:
                return out
    return None


def _by_search(h: MultiGraph, cfg: SearchConfig = SearchConfig()) -> tuple[int, ...]:
    res = search_k(h, 3, cfg)
    if res.status == FOUND:
        return res.coloring.colors
    if res.status == ABSENT:
        raise PreconditionError("graph is not odd 3-edge-colorable")
    raise BudgetExhausted(f"exhaustive 3-coloring search gave up after {res.nodes} nodes")


_STRATEGIES: list[tuple[str, Callable[[MultiGraph], Optional[tuple[int, ...]]]]] = [
    (EVEN_ORDER, _by_even_order),
    (BRIDGE, _by_bridge),
    (ADJACENT_TWOS, _by_adjacent_twos),
    (AUGMENTATION, _by_augmentation),
    (TREE_RETRY, _by_tree_retry),
]


def _color3_core(h: MultiGraph) -> tuple[tuple[int, ...], str]:
    if h.m == 0:
        return (), EVEN_ORDER
    for name, strategy in _STRATEGIES:
        out = strategy(h)
        if out is not None:
            return out, name
    return _by_search(h), EXHAUSTIVE


def color3_traced(g: MultiGraph) -> tuple[EdgeColoring, str]:
    """An odd coloring with at most 3 colors, and the strategy that built it."""
    if g.n > 1 and not is_connected(g):
        raise DisconnectedError("color3 needs a connected graph")
    h, emap = _loopless(g)
    colors, name = _color3_core(h)
    col = _lift(g, emap, colors)
    assert verify_odd(col)
    return col, name


def color3(g: MultiGraph) -> EdgeColoring:
    return color3_traced(g)[0]


def color3_via_augmentation(g: MultiGraph) -> EdgeColoring:
    return augmentation.color3_via_augmentation(g)


# -- four colors ---------------------------------------------------------------------------------


def _color4_core(h: MultiGraph) -> tuple[tuple[int, ...], int]:
    cuts = cut_vertices(h)
    twos = h.vertices_of_degree(2)
    if any(v in cuts for v in twos):
        raise ConstructionDivergence("a 2-vertex of a four-color graph is a cut-vertex")
    if any(h.other(e, v) in set(twos) for v in twos for e in h.incident(v)):
        raise ConstructionDivergence("two 2-vertices of a four-color graph are adjacent")
    v = twos[0]
    e, f = h.incident(v)
    w = h.other(f, v)
    rest = h.delete_vertices([v])
    colors: list = [None] * h.m
    for i, c in enumerate(even_order_color3(rest.graph).colors):
        colors[rest.emap[i]] = c
    colors[f] = min({1, 2, 3} - set(colors_at(h, colors, w)))
    colors[e] = 4
    col = EdgeColoring(h, tuple(colors))
    if not verify_odd(col):
        raise ConstructionDivergence(f"four-coloring failed at {verify_odd(col).violations[:3]}")
    return col.colors, e


def _require_four(g: MultiGraph) -> tuple[MultiGraph, tuple[int, ...]]:
    _check_domain(g)
    h, emap = _loopless(g)
    chi, _ = _decide(h)
    if chi != 4:
        raise PreconditionError(f"graph has odd chromatic index {chi}, not 4")
    return h, emap


def color4_singleton(g: MultiGraph) -> tuple[EdgeColoring, int]:
    """Odd 4-coloring whose fourth color sits on a single edge, and that edge."""
    h, emap = _require_four(g)
    colors, e = _color4_core(h)
    return _lift(g, emap, colors), emap[e]


def witness_edge(g: MultiGraph) -> tuple[int, EdgeColoring]:
    """An edge whose removal leaves an odd 3-colorable graph, with a
    3-coloring of ``g - e`` (edge ids of ``g - e`` follow ``g`` without ``e``)."""
    _, e = color4_singleton(g)
    rest = g.delete_edges([e]).graph
    col = color3(rest)
    assert verify_odd(col) and col.k <= 3
    return e, col


# -- entry points ------------------------------------------------------------------------------


def classify(g: MultiGraph) -> ChiReport:
    _check_domain(g)
    h, emap = _loopless(g)
    chi, tag = _decide(h)
    witness = None
    if chi == 0:
        colors: tuple[int, ...] = ()
    elif chi == 1:
        colors = monochrome(h).colors
    elif chi == 2:
        colors = color2(h).colors
    elif chi == 3:
        colors, _ = _color3_core(h)
    else:
        colors, e = _color4_core(h)
        witness = emap[e]
    col = _lift(g, emap, colors)
    check = verify_odd(col)
    if not check or col.k != chi:
        raise ConstructionDivergence(f"coloring for chi={chi} does not verify: {check.violations[:3]}")
    return ChiReport(chi, tag, col, witness)


def color_optimal(g: MultiGraph) -> EdgeColoring:
    return classify(g).coloring
