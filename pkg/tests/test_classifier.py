import pytest
from hypothesis import given, settings

from oddchrome import classify, color3, color4_singleton, color_optimal, verify_odd, witness_edge
from oddchrome.classifier import (EMPTY, FAMILY_F, ODD, OTHERWISE, QUOTIENT_BIPARTITE, chi_of, color3_traced,
                                  is_in_S4_block)
from oddchrome.errors import DisconnectedError, NotInClassError, PreconditionError
from oddchrome.family import complete_bipartite, gen_F, gen_S, glue_compose, k33, shannon_triangle, subdivided
from oddchrome.multigraph import MultiGraph, disjoint_union, identify, subdivide
from oddchrome.oracle import chi

from .helpers import seeds


def two_blocks_at_vertex(a: MultiGraph, b: MultiGraph, va: int, vb: int) -> MultiGraph:
    """Identify vertex ``va`` of ``a`` with vertex ``vb`` of ``b``."""
    u = disjoint_union(a, b)
    return identify(u, va, a.n + vb).graph


class TestCases:
    def test_edgeless(self):
        rep = classify(MultiGraph(1))
        assert (rep.chi, rep.case_tag) == (0, EMPTY)

    def test_odd(self):
        rep = classify(k33())
        assert (rep.chi, rep.case_tag) == (1, ODD)

    def test_two(self):
        g = subdivide(MultiGraph(2, [(0, 1)] * 3), 0, 2).graph
        rep = classify(g)
        assert (rep.chi, rep.case_tag) == (2, QUOTIENT_BIPARTITE)
        assert rep.coloring.k == 2

    def test_four_family(self):
        for g in (subdivided(k33()), shannon_triangle(2, 1, 1), shannon_triangle(1, 1, 4)):
            rep = classify(g)
            assert (rep.chi, rep.case_tag) == (4, FAMILY_F)
            assert rep.witness_edge is not None
            assert verify_odd(rep.coloring)

    def test_three_for_k35(self):
        g = subdivided(complete_bipartite(3, 5))
        rep = classify(g)
        assert (rep.chi, rep.case_tag) == (3, OTHERWISE)
        assert verify_odd(rep.coloring) and rep.coloring.k == 3

    def test_chi_of_matches_classify(self):
        for g in (subdivided(k33()), k33(), subdivided(complete_bipartite(3, 5))):
            assert chi_of(g) == classify(g).chi


class TestBlocks:
    def test_family_blocks_odd_in_one(self):
        # the cut-vertex is a branch vertex of one block and the 2-vertex of the other
        a = shannon_triangle(2, 1, 1)
        g = two_blocks_at_vertex(a, a, 0, 2)
        rep = classify(g)
        assert (rep.chi, rep.case_tag) == (4, FAMILY_F)
        assert chi(g).chi == 4

    def test_family_blocks_odd_in_three(self):
        a = shannon_triangle(2, 1, 1)
        g = two_blocks_at_vertex(a, a, 0, 0).add_edges([(0, 5)], 1)
        assert g.degree(0) == 7
        rep = classify(g)
        assert rep.chi == 3 == chi(g).chi

    def test_even_cut_vertex_rejected(self):
        a = subdivided(k33())
        with pytest.raises(NotInClassError):
            classify(two_blocks_at_vertex(a, a, 0, 0))

    def test_family_block_with_pendant(self):
        a = subdivided(k33())
        g = a.add_edges([(1, a.n), (1, a.n + 1)], 2)
        # vertex 1 now has degree 5: odd in the block, even (2) in the pendant star block
        assert g.degree(1) == 5
        rep = classify(g)
        assert rep.chi == chi(g).chi

    def test_is_in_S4_block(self):
        assert is_in_S4_block(subdivided(k33()))
        assert not is_in_S4_block(subdivided(complete_bipartite(3, 5)))


class TestLoops:
    def test_loop_takes_present_color(self):
        g = subdivided(k33()).add_edges([(0, 0)])
        rep = classify(g)
        assert rep.chi == 4 == chi(g).chi
        assert rep.coloring.colors[-1] in rep.coloring.colors[:-1]

    def test_loop_on_odd_graph(self):
        g = MultiGraph(2, [(0, 1), (0, 0), (1, 1)])
        assert classify(g).chi == 1


class TestDomain:
    def test_disconnected(self):
        with pytest.raises(DisconnectedError):
            classify(MultiGraph(4, [(0, 1), (2, 3)]))

    def test_not_in_class(self):
        with pytest.raises(NotInClassError):
            classify(MultiGraph(3, [(0, 1), (1, 2), (2, 0)]))

    def test_color4_needs_four(self):
        with pytest.raises(PreconditionError):
            color4_singleton(subdivided(complete_bipartite(3, 5)))

    def test_color3_on_four_chromatic(self):
        with pytest.raises(PreconditionError):
            color3(subdivided(k33()))


class TestWitness:
    def test_subdivided_k33(self):
        g = subdivided(k33())
        e, col = witness_edge(g)
        assert col.graph == g.delete_edges([e]).graph
        assert verify_odd(col) and col.k <= 3

    def test_singleton_class(self):
        g = glue_compose(subdivided(k33()), shannon_triangle(2, 1, 1), 3, 2)
        col, e = color4_singleton(g)
        assert verify_odd(col)
        assert col.classes()[4] == [e]


class TestAgainstOracle:
    @settings(max_examples=80, deadline=None)
    @given(seeds)
    def test_random_members(self, seed):
        g = gen_S(seed, 10, max_m=12)
        rep = classify(g)
        assert verify_odd(rep.coloring)
        assert rep.coloring.k == rep.chi == chi(g).chi

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_family_members(self, seed):
        g = gen_F(seed, 14)
        assert classify(g).chi == 4 == chi(g).chi

    @settings(max_examples=40, deadline=None)
    @given(seeds)
    def test_color3_strategies_verify(self, seed):
        g = gen_S(seed, 12, max_m=16)
        if classify(g).chi != 3:
            return
        col, strategy = color3_traced(g)
        assert verify_odd(col) and col.k <= 3
        assert isinstance(strategy, str)

    def test_color_optimal(self):
        g = subdivided(complete_bipartite(3, 5))
        assert color_optimal(g).k == 3
