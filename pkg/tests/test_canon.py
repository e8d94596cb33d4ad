import random

import networkx as nx
from hypothesis import given, settings

from oddchrome.canon import are_isomorphic, canonical_form, canonical_graph
from oddchrome.family import cube, prism
from oddchrome.multigraph import MultiGraph

from .helpers import multigraphs, seeds


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def shuffled(g: MultiGraph, seed: int) -> MultiGraph:
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    rng.shuffle(edges)
    return MultiGraph(g.n, tuple(edges))


class TestCanonicalForm:
    def test_canonical_graph_is_isomorphic(self):
        g = prism(5)
        assert nx.is_isomorphic(to_nx(canonical_graph(g)), to_nx(g))

    def test_vertex_transitive_graphs(self):
        assert canonical_form(cube()) == canonical_form(shuffled(cube(), 7))

    def test_loops_and_multiplicity_matter(self):
        a = MultiGraph(2, [(0, 1), (0, 0)])
        b = MultiGraph(2, [(0, 1), (1, 1)])
        c = MultiGraph(2, [(0, 1), (0, 1)])
        assert are_isomorphic(a, b)
        assert not are_isomorphic(a, c)

    def test_prism_versus_mobius_ladder(self):
        mobius = MultiGraph(6, [(i, (i + 1) % 6) for i in range(6)] + [(i, i + 3) for i in range(3)])
        assert not are_isomorphic(prism(3), mobius)

    @given(multigraphs(max_n=7, max_m=12), seeds)
    def test_invariant_under_relabelling(self, g, seed):
        assert canonical_form(g) == canonical_form(shuffled(g, seed))

    @settings(max_examples=300)
    @given(multigraphs(max_n=6, max_m=9), multigraphs(max_n=6, max_m=9))
    def test_agrees_with_networkx(self, a, b):
        if a.n != b.n or a.m != b.m:
            return
        assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))

    @settings(max_examples=300)
    @given(multigraphs(max_n=7, max_m=10), seeds)
    def test_near_copies_agree_with_networkx(self, a, seed):
        if a.m == 0:
            return
        rng = random.Random(seed)
        b = shuffled(a, seed)
        edges = list(b.edges)
        edges[0] = (edges[0][0], rng.randrange(b.n))
        b = MultiGraph(b.n, tuple(edges))
        assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
