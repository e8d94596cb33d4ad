import pytest
from hypothesis import given, settings

from oddchrome.canon import are_isomorphic
from oddchrome.errors import GraphInputError, PreconditionError
from oddchrome.family import (CUBIC_CATALOG, complete_bipartite, cube, gen_F, gen_S, glue_compose, glue_split,
                              heawood, is_in_F, is_shannon_211_min2, is_subdivided_cubic_bipartite, k33, prism,
                              shannon_chi, shannon_triangle, shannon_type, subdivided)
from oddchrome.multigraph import MultiGraph
from oddchrome.oracle import chi
from oddchrome.sclass import is_in_S
from oddchrome.structure import is_bipartite, is_connected, is_two_connected

from .helpers import seeds


class TestShannon:
    def test_type_sorts_parities(self):
        t = shannon_type(shannon_triangle(3, 2, 1))
        assert t.parities == (2, 1, 1)
        assert t.sizes == (3, 2, 1)
        assert shannon_chi(t) == 4

    def test_all_even(self):
        assert shannon_type(shannon_triangle(2, 2, 2)).chi == 6

    def test_not_a_triangle(self):
        assert shannon_type(MultiGraph(3, [(0, 1), (1, 2)])) is None
        assert shannon_type(MultiGraph(2, [(0, 1)])) is None

    def test_empty_bouquet_rejected(self):
        with pytest.raises(GraphInputError):
            shannon_triangle(0, 1, 1)

    def test_minimum_degree_two_form(self):
        assert is_shannon_211_min2(shannon_triangle(2, 1, 1))
        assert is_shannon_211_min2(shannon_triangle(1, 4, 1))
        assert not is_shannon_211_min2(shannon_triangle(2, 2, 1))
        assert not is_shannon_211_min2(shannon_triangle(2, 3, 1))


class TestCatalog:
    @pytest.mark.parametrize("name", sorted(CUBIC_CATALOG))
    def test_catalog_is_bipartite_cubic(self, name):
        g = CUBIC_CATALOG[name]()
        assert set(g.degrees()) == {3}
        assert is_bipartite(g)[0] and is_two_connected(g)
        assert is_subdivided_cubic_bipartite(subdivided(g))

    def test_sizes(self):
        assert (k33().n, k33().m) == (6, 9)
        assert (cube().n, cube().m) == (8, 12)
        assert (heawood().n, heawood().m) == (14, 21)
        assert complete_bipartite(3, 5).m == 15

    def test_odd_prism_not_bipartite(self):
        assert not is_subdivided_cubic_bipartite(subdivided(prism(3)))


class TestMembership:
    def test_members(self):
        assert is_in_F(shannon_triangle(2, 1, 1))
        assert is_in_F(shannon_triangle(6, 1, 1))
        assert is_in_F(subdivided(k33()))
        assert is_in_F(subdivided(heawood(), 5))

    def test_non_members(self):
        assert not is_in_F(subdivided(complete_bipartite(3, 5)))
        assert not is_in_F(subdivided(complete_bipartite(5, 5)))
        assert not is_in_F(subdivided(prism(3)))
        assert not is_in_F(subdivided(subdivided(k33()), 4))
        assert not is_in_F(MultiGraph(2, [(0, 1)] * 3))

    def test_domain(self):
        with pytest.raises(PreconditionError):
            is_in_F(MultiGraph(3, [(0, 1), (1, 2)]))


class TestGluing:
    def test_vertex_count(self):
        g = glue_compose(shannon_triangle(2, 1, 1), shannon_triangle(2, 1, 1), 2, 2)
        assert g.n == 5
        assert g.m == 7
        assert is_in_F(g)

    def test_k33_glued_to_itself(self):
        a = subdivided(k33())
        g = glue_compose(a, a, 3, a.vertices_of_degree(2)[0])
        assert (g.n, g.m) == (13, 19)
        assert is_in_F(g)
        assert chi(g).chi == 4
        s = glue_split(g)
        assert is_subdivided_cubic_bipartite(s.g_prime)
        assert is_subdivided_cubic_bipartite(s.g_dblprime)

    def test_split_undoes_compose(self):
        a = subdivided(k33())
        b = subdivided(cube(), 3)
        z = b.vertices_of_degree(2)[0]
        two = a.vertices_of_degree(2)[0]
        for e in range(a.m):
            for variant in (0, 1):
                g = glue_compose(a, b, e, z, variant)
                assert is_in_F(g)
                if two in a.edges[e]:
                    # the edges at the 2-vertex give another nontrivial cut
                    continue
                s = glue_split(g)
                assert are_isomorphic(s.g_prime, a)
                assert are_isomorphic(s.g_dblprime, b)

    def test_no_cut_gives_none(self):
        assert glue_split(subdivided(k33())) is None

    def test_bad_arguments(self):
        a = subdivided(k33())
        with pytest.raises(GraphInputError):
            glue_compose(a, a, 99, a.vertices_of_degree(2)[0])
        with pytest.raises(PreconditionError):
            glue_compose(a, a, 0, 0)
        with pytest.raises(GraphInputError):
            glue_compose(a, a, 1, a.vertices_of_degree(2)[0], variant=2)

    @settings(max_examples=60, deadline=None)
    @given(seeds, seeds)
    def test_variants_both_stay_in_family(self, s1, s2):
        a = gen_F(s1, 20)
        b = gen_F(s2, 20)
        z = b.vertices_of_degree(2)[0]
        e = s1 % a.m
        for variant in (0, 1):
            g = glue_compose(a, b, e, z, variant)
            assert is_in_S(g) and is_two_connected(g)
            assert is_in_F(g)


class TestGenerators:
    def test_deterministic(self):
        assert gen_F(5, 40) == gen_F(5, 40)
        assert gen_S(5, 12) == gen_S(5, 12)

    def test_budget_too_small(self):
        with pytest.raises(PreconditionError):
            gen_F(0, 3)
        with pytest.raises(PreconditionError):
            gen_S(0, 1)

    @settings(max_examples=60, deadline=None)
    @given(seeds)
    def test_gen_F_members(self, seed):
        g = gen_F(seed, 40)
        assert g.m <= 40
        assert is_two_connected(g) and is_in_S(g)
        assert len(g.vertices_of_degree(2)) == 1
        assert is_in_F(g)

    @given(seeds)
    def test_gen_S_members(self, seed):
        g = gen_S(seed, 12, max_m=16)
        assert g.n <= 12 and g.m <= 16
        assert is_connected(g) and is_in_S(g)
