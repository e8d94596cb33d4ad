"""Shannon triangles, the four-color family, gluing, and random generators.

The family is generated from two kinds of base graphs (a Shannon triangle
whose bouquets have sizes (even, 1, 1), and a 2-connected bipartite cubic
graph with one edge subdivided) by repeatedly gluing two members across a
2-edge-cut. :func:`is_in_F` decides membership by undoing gluings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError, NotInClassError, PreconditionError
from .multigraph import MultiGraph, is_odd_graph, subdivide, suppress
from .sclass import is_in_S
from .structure import TwoEdgeCut, is_bipartite, is_connected, is_two_connected, nontrivial_two_edge_cut


# -- Shannon triangles ------------------------------------------------------------------


@dataclass(frozen=True)
class ShannonType:
    parities: tuple[int, int, int]   # 2 for an even bouquet, 1 for an odd one; non-increasing
    sizes: tuple[int, int, int]      # bouquet sizes of 01, 12, 02

    @property
    def chi(self) -> int:
        return sum(self.parities)


def shannon_triangle(a: int, b: int, c: int) -> MultiGraph:
    """Three vertices with ``a`` edges 0-1, ``b`` edges 1-2 and ``c`` edges 0-2."""
    if min(a, b, c) < 1:
        raise GraphInputError("every bouquet of a Shannon triangle is nonempty")
    return MultiGraph(3, ((0, 1),) * a + ((1, 2),) * b + ((0, 2),) * c)


def shannon_type(g: MultiGraph) -> Optional[ShannonType]:
    if g.n != 3 or g.loops:
        return None
    sizes = [0, 0, 0]
    slot = {(0, 1): 0, (1, 2): 1, (0, 2): 2}
    for u, v in g.edges:
        sizes[slot[(min(u, v), max(u, v))]] += 1
    if min(sizes) == 0:
        return None
    par = tuple(sorted((2 - s % 2 for s in sizes), reverse=True))
    return ShannonType(par, tuple(sizes))


def shannon_chi(t: ShannonType) -> int:
    return t.chi


def is_shannon_211_min2(g: MultiGraph) -> bool:
    t = shannon_type(g)
    return t is not None and t.parities == (2, 1, 1) and g.min_degree == 2


# -- bipartite cubic bases ----------------------------------------------------------------


def _unique_two_vertex(g: MultiGraph) -> Optional[int]:
    twos = g.vertices_of_degree(2)
    return twos[0] if len(twos) == 1 else None


def _suppressed_is_bipartite_odd(g: MultiGraph, regular: Optional[int] = None) -> bool:
    v = _unique_two_vertex(g)
    if v is None or len(g.incident(v)) != 2:
        return False
    h = suppress(g, v).graph
    if regular is not None and any(d != regular for d in h.degrees()):
        return False
    return is_odd_graph(h) and is_two_connected(h) and is_bipartite(h)[0]


def is_subdivided_cubic_bipartite(g: MultiGraph) -> bool:
    return _suppressed_is_bipartite_odd(g, regular=3)


def k33() -> MultiGraph:
    return MultiGraph(6, tuple((i, j) for i in range(3) for j in range(3, 6)))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cube() -> MultiGraph:
    return MultiGraph(8, tuple((i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)))


def heawood() -> MultiGraph:
    ring = [(i, (i + 1) % 14) for i in range(14)]
    chords = [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return MultiGraph(14, tuple(ring + chords))


def prism(k: int) -> MultiGraph:
    """The prism over a cycle of length ``k`` (bipartite when ``k`` is even)."""
    if k < 3:
        raise GraphInputError("a prism needs a cycle of length at least 3")
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    spokes = [(i, k + i) for i in range(k)]
    return MultiGraph(2 * k, tuple(outer + inner + spokes))


# Fixed catalog of 2-connected bipartite cubic graphs used as base cases.
CUBIC_CATALOG = {
    "K33": k33,
    "Q3": cube,
    "heawood": heawood,
    "prism6": lambda: prism(6),
    "prism8": lambda: prism(8),
    "prism10": lambda: prism(10),
}


def subdivided(g: MultiGraph, e: int = 0) -> MultiGraph:
    return subdivide(g, e, 1).graph


# -- gluing -----------------------------------------------------------------------------------


@dataclass(frozen=True)
class GlueSplit:
    cut: TwoEdgeCut
    g_prime: MultiGraph        # side holding the 2-vertex, plus an edge across its cut ends
    g_dblprime: MultiGraph     # the other side, plus a new 2-vertex on its cut ends
    prime_vertices: tuple[int, ...]      # g_prime vertex -> host vertex
    dblprime_vertices: tuple[int, ...]   # g_dblprime vertex -> host vertex (last one is new)


def glue_split(g: MultiGraph) -> Optional[GlueSplit]:
    """Undo one gluing across a nontrivial 2-edge-cut, if there is one."""
    if not is_two_connected(g):
        raise PreconditionError("glue_split needs a 2-connected graph")
    v = _unique_two_vertex(g)
    if v is None:
        raise PreconditionError("glue_split needs exactly one 2-vertex")
    cut = nontrivial_two_edge_cut(g)
    if cut is None:
        return None
    X = set(cut.side) if v in cut.side else set(cut.other_side)
    Y = set(range(g.n)) - X
    ends = []
    for e in cut.edges:
        a, b = g.edges[e]
        ends.append((a, b) if a in X else (b, a))
    (x1, y1), (x2, y2) = ends
    if x1 == x2 or y1 == y2:
        raise PreconditionError("cut edges share an endpoint; the graph has a cut-vertex")
    gx = g.induced(X)
    g1 = gx.graph.add_edges([(gx.vmap[x1], gx.vmap[x2])])
    gy = g.induced(Y)
    z = gy.graph.n
    g2 = gy.graph.add_edges([(gy.vmap[y1], z), (z, gy.vmap[y2])], extra_vertices=1)
    inv_x = tuple(sorted(X))
    inv_y = tuple(sorted(Y)) + (-1,)
    return GlueSplit(cut, g1, g2, inv_x, inv_y)


def glue_compose(g1: MultiGraph, g2: MultiGraph, edge_of_g1: int, two_vertex_of_g2: int, variant: int = 0) -> MultiGraph:
    """Cut edge ``a b`` of ``g1`` and the 2-vertex ``z`` of ``g2`` (neighbours
    ``y1, y2``) and reconnect across: variant 0 joins ``a y1, b y2``,
    variant 1 joins ``a y2, b y1``.

    Vertices of ``g1`` keep their ids; those of ``g2 - z`` follow in order.
    """
    if not 0 <= edge_of_g1 < g1.m:
        raise GraphInputError(f"edge {edge_of_g1} is not an edge of the first graph")
    if g1.is_loop(edge_of_g1):
        raise GraphInputError("cannot glue along a loop")
    z = two_vertex_of_g2
    if g2.degree(z) != 2 or len(g2.incident(z)) != 2:
        raise PreconditionError(f"vertex {z} of the second graph is not a 2-vertex")
    if variant not in (0, 1):
        raise GraphInputError("variant is 0 or 1")
    a, b = g1.edges[edge_of_g1]
    y1, y2 = (g2.other(e, z) for e in g2.incident(z))
    rest = g2.delete_vertices([z])
    shift = {old: g1.n + new for old, new in rest.vmap.items()}
    if variant:
        y1, y2 = y2, y1
    edges = [e for i, e in enumerate(g1.edges) if i != edge_of_g1]
    edges += [(g1.n + u, g1.n + w) for u, w in rest.graph.edges]
    edges += [(a, shift[y1]), (b, shift[y2])]
    return MultiGraph(g1.n + rest.graph.n, tuple(edges))


def is_in_F(g: MultiGraph) -> bool:
    """Membership in the four-color family for a 2-connected class member."""
    if not is_two_connected(g):
        raise PreconditionError("is_in_F needs a 2-connected graph")
    if not is_in_S(g):
        raise NotInClassError("is_in_F needs a subdivision of an odd graph")
    if not _suppressed_is_bipartite_odd(g):
        return False
    split = glue_split(g)
    if split is not None:
        assert split.g_prime.m < g.m and split.g_dblprime.m < g.m
        return is_in_F(split.g_prime) and is_in_F(split.g_dblprime)
    return g.max_degree == 3 or (g.n == 3 and is_shannon_211_min2(g))


# -- generators ---------------------------------------------------------------------------------


def _shuffled(rng: random.Random, g: MultiGraph) -> MultiGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    rng.shuffle(edges)
    return MultiGraph(g.n, tuple(edges))


def _bases(rng: random.Random, room: int) -> list[MultiGraph]:
    out = [shannon_triangle(k, 1, 1) for k in (2, 4, 6)]
    for make in CUBIC_CATALOG.values():
        h = make()
        out.append(subdivided(h, rng.randrange(h.m)))
    return [b for b in out if b.m <= room]


def gen_F(seed: int, size_budget: int) -> MultiGraph:
    """A random family member with at most ``size_budget`` edges."""
    rng = random.Random(seed)
    if size_budget < 4:
        raise PreconditionError("the smallest family member has 4 edges")
    g = rng.choice(_bases(rng, size_budget))
    while True:
        if g.m >= size_budget / 2 and rng.random() < 0.15:
            break
        choices = _bases(rng, size_budget - g.m + 1)
        if not choices:
            break
        b = rng.choice(choices)
        variant = rng.randrange(2)
        if rng.random() < 0.5:
            g = glue_compose(g, b, rng.randrange(g.m), _unique_two_vertex(b), variant)
        else:
            g = glue_compose(b, g, rng.randrange(b.m), _unique_two_vertex(g), variant)
    return _shuffled(rng, g)


def gen_S(seed: int, n_budget: int, max_m: Optional[int] = None) -> MultiGraph:
    """A random connected subdivision of an odd graph on at most ``n_budget`` vertices."""
    rng = random.Random(seed)
    if n_budget < 2:
        raise PreconditionError("a connected class member needs at least 2 vertices")
    if max_m is not None and max_m < 1:
        raise PreconditionError("max_m must be positive")
    for _ in range(10000):
        k = 2 * rng.randint(1, n_budget // 2)
        edges = [(i, rng.randrange(i)) for i in range(1, k)]
        for _ in range(rng.randint(0, k // 2 + 1)):
            a = rng.randrange(k)
            b = a if rng.random() < 0.1 else rng.randrange(k)
            edges.append((a, b))
        g = MultiGraph(k, tuple(edges))
        even = [x for x in range(k) if g.degree(x) % 2 == 0]
        rng.shuffle(even)
        g = g.add_edges(zip(even[0::2], even[1::2]))
        for _ in range(rng.randint(0, n_budget - k)):
            g = subdivide(g, rng.randrange(g.m), 1).graph
        if max_m is None or g.m <= max_m:
            g = _shuffled(rng, g)
            assert is_in_S(g) and is_connected(g)
            return g
    raise PreconditionError(f"could not draw a graph with n <= {n_budget} and m <= {max_m}")
