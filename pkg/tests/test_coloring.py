import pytest
from hypothesis import given

from oddchrome.coloring import (EdgeColoring, around_vertex_color2, even_order_color3, forest_color2,
                                monochrome, unicyclic_chi, unicyclic_chi2_special, unicyclic_color, verify_odd,
                                verify_odd_away_from)
from oddchrome.errors import GraphInputError, PreconditionError
from oddchrome.multigraph import MultiGraph
from oddchrome.oracle import chi

from .helpers import connected_multigraphs, forests, is_odd_assignment


def star(k: int) -> MultiGraph:
    return MultiGraph(k + 1, [(0, i) for i in range(1, k + 1)])


class TestEdgeColoring:
    def test_length_checked(self):
        with pytest.raises(GraphInputError):
            EdgeColoring(MultiGraph(2, [(0, 1)]), (1, 2))

    def test_colors_positive(self):
        with pytest.raises(GraphInputError):
            EdgeColoring(MultiGraph(2, [(0, 1)]), (0,))

    def test_normalized_and_classes(self):
        g = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
        col = EdgeColoring(g, (7, 3, 7)).normalized()
        assert col.colors == (1, 2, 1)
        assert col.classes() == {1: [0, 2], 2: [1]}
        assert col.k == 2

    def test_verifier_reports_violations(self):
        g = MultiGraph(3, [(0, 1), (1, 2)])
        check = verify_odd(EdgeColoring(g, (1, 1)))
        assert not check
        assert check.violations == [(1, 1, 2)]
        assert verify_odd(EdgeColoring(g, (1, 2)))
        assert verify_odd_away_from(EdgeColoring(g, (1, 1)), 1)

    def test_loop_counts_twice_in_verifier(self):
        g = MultiGraph(2, [(0, 1), (0, 0)])
        assert verify_odd(EdgeColoring(g, (1, 1)))
        assert not verify_odd(EdgeColoring(g, (1, 2)))

    def test_monochrome(self):
        assert verify_odd(monochrome(MultiGraph(2, [(0, 1)] * 3)))


class TestForests:
    def test_path(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (2, 3)])
        col = forest_color2(g)
        assert verify_odd(col)

    def test_seeded_vertex(self):
        g = star(4)
        col = forest_color2(g, 0, {0: 2})
        assert col.colors[0] == 2
        assert verify_odd_away_from(col, 0)

    def test_rejects_cycle(self):
        with pytest.raises(PreconditionError):
            forest_color2(MultiGraph(2, [(0, 1), (0, 1)]))

    def test_seed_must_touch_vertex(self):
        with pytest.raises(GraphInputError):
            forest_color2(MultiGraph(3, [(0, 1), (1, 2)]), 0, {1: 1})

    def test_around_vertex(self):
        # wheel-like: centre joined to a path
        g = MultiGraph(5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)])
        col = around_vertex_color2(g, 0)
        assert verify_odd_away_from(col, 0)
        assert col.k <= 2

    @given(forests())
    def test_forest_color2_is_odd(self, f):
        col = forest_color2(f)
        assert verify_odd(col)
        assert set(col.colors) <= {1, 2}


class TestUnicyclic:
    def test_odd_cycle(self):
        c5 = MultiGraph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert unicyclic_chi(c5) == 3
        assert not unicyclic_chi2_special(c5)
        assert verify_odd(unicyclic_color(c5))

    def test_even_cycle(self):
        c4 = MultiGraph(4, [(i, (i + 1) % 4) for i in range(4)])
        assert unicyclic_chi(c4) == 2
        assert unicyclic_chi2_special(c4)

    def test_odd_unicyclic_rejected(self):
        g = MultiGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        assert unicyclic_chi(g) == 2
        odd = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])
        with pytest.raises(PreconditionError):
            unicyclic_chi(odd)

    @given(connected_multigraphs(max_n=9, max_extra=1))
    def test_unicyclic_against_oracle(self, g):
        if g.m != g.n or g.loops or all(d % 2 for d in g.degrees()):
            return
        col = unicyclic_color(g)
        assert verify_odd(col)
        assert col.k == unicyclic_chi(g) == chi(g).chi


class TestEvenOrder:
    def test_k4(self):
        g = MultiGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        col = even_order_color3(g)
        assert verify_odd(col)

    def test_odd_order_rejected(self):
        with pytest.raises(PreconditionError):
            even_order_color3(MultiGraph(3, [(0, 1), (1, 2)]))

    @given(connected_multigraphs(loops=True))
    def test_even_order_always_three(self, g):
        if g.n % 2:
            return
        col = even_order_color3(g)
        assert verify_odd(col)
        assert is_odd_assignment(g, col.colors)
        assert set(col.colors) <= {1, 2, 3}
