import pytest

from oddchrome.augmentation import (AUGMENT, WITNESS, _Augmenter, augmentation_problem, color3_traced,
                                    cycle_pair)
from oddchrome.coloring import verify_odd
from oddchrome.errors import ConstructionDivergence, PreconditionError
from oddchrome.family import complete_bipartite, k33, subdivided
from oddchrome.multigraph import MultiGraph
from oddchrome.oracle import chi
from oddchrome.structure import iter_cycles_through


def pentagon_with_bouquets() -> MultiGraph:
    # 5-cycle through the 2-vertex 4 with bouquets of sizes 2, 3, 2 along it
    return MultiGraph(5, [(0, 1)] * 2 + [(1, 2)] * 3 + [(2, 3)] * 2 + [(4, 0), (4, 3)])


def detour_instance() -> MultiGraph:
    v, u, a, z, zb, b, w, y, yp = range(9)
    return MultiGraph(9, [(v, u), (u, a), (a, z), (z, zb), (zb, b), (b, w), (w, v), (z, zb), (z, zb),
                          (z, y), (y, u), (zb, yp), (yp, w), (y, yp), (a, b)])


class TestPreconditions:
    def test_accepts_named_instances(self):
        assert augmentation_problem(subdivided(complete_bipartite(3, 5))) is None
        assert augmentation_problem(pentagon_with_bouquets()) is None

    def test_reasons(self):
        assert "maximum degree" in augmentation_problem(subdivided(k33()))
        assert "loops" in augmentation_problem(MultiGraph(2, [(0, 1), (0, 0)]))
        twice = subdivided(subdivided(complete_bipartite(3, 5)), 3)
        assert "2" in augmentation_problem(twice)

    def test_traced_rejects_out_of_domain(self):
        with pytest.raises(PreconditionError):
            color3_traced(subdivided(k33()))


class TestRoutes:
    @pytest.mark.parametrize("a,b", [(3, 5), (5, 5)])
    def test_complete_bipartite_via_cycle_pair(self, a, b):
        g = subdivided(complete_bipartite(a, b))
        col, route = color3_traced(g)
        assert route == WITNESS
        assert verify_odd(col) and col.k == 3

    def test_bouquet_pentagon_via_augmentation(self):
        g = pentagon_with_bouquets()
        col, route = color3_traced(g)
        assert route == AUGMENT
        assert verify_odd(col) and col.k == 3
        assert chi(g).chi == 3

    def test_detour_instance(self):
        g = detour_instance()
        assert augmentation_problem(g) is None
        col, route = color3_traced(g)
        assert route == AUGMENT
        assert verify_odd(col)
        assert chi(g).chi == 3


class TestAugmenter:
    def test_detour_paths(self):
        g = detour_instance()
        aug = _Augmenter(g, 0, [0, 1, 2, 3, 4, 5, 6], [0, 1, 2, 3, 4, 5, 6])
        col = aug.run()
        assert aug.paths == [(3, 1, [9, 10]), (4, 6, [11, 12])]
        assert col.colors == (1, 1, 2, 3, 1, 2, 2, 1, 2, 2, 1, 1, 2, 3, 3)

    def test_no_large_bouquet_diverges(self):
        g = subdivided(complete_bipartite(3, 5))
        v = g.vertices_of_degree(2)[0]
        vs, es = next(vs_es for vs_es in iter_cycles_through(g, v) if len(vs_es[0]) >= 5)
        with pytest.raises(ConstructionDivergence):
            _Augmenter(g, v, vs, es).run()

    def test_cycle_pair_on_k35(self):
        g = subdivided(complete_bipartite(3, 5))
        v = g.vertices_of_degree(2)[0]
        vs, es = next(iter_cycles_through(g, v))
        pair = cycle_pair(g, vs, es)
        assert pair is not None
        touched = {x for e in pair for x in g.edges[e]}
        assert len(touched & set(vs)) == 1
