"""Canonical forms for small multigraphs (loops allowed).

Individualization-refinement: color refinement on the multiplicity
matrix, then branch on the first non-singleton cell. Automorphisms found
along the way (two leaves with equal certificates) prune sibling branches
in the same orbit.
"""

from __future__ import annotations

from .multigraph import MultiGraph


def _rank(sig: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [order[s] for s in sig]


class _Canon:
    def __init__(self, g: MultiGraph):
        n = g.n
        self.n = n
        mult: list[dict[int, int]] = [dict() for _ in range(n)]
        loops = [0] * n
        for u, v in g.edges:
            if u == v:
                loops[u] += 1
            else:
                mult[u][v] = mult[u].get(v, 0) + 1
                mult[v][u] = mult[v].get(u, 0) + 1
        self.nbrs = [tuple(d.items()) for d in mult]
        self.edges = g.edges
        self.init = _rank([(g.degree(v), loops[v]) for v in range(n)])
        self.best: tuple | None = None
        self.best_perm: list[int] | None = None
        self.autos: list[list[int]] = []

    def refine(self, colors: list[int]) -> list[int]:
        k = len(set(colors))
        while True:
            sig = [(colors[v], tuple(sorted((colors[w], c) for w, c in self.nbrs[v]))) for v in range(self.n)]
            new = _rank(sig)
            k2 = len(set(new))
            if k2 == k:
                return new
            colors, k = new, k2

    def cert(self, perm: list[int]) -> tuple:
        return tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in self.edges))

    def search(self, colors: list[int], fixed: list[int]) -> None:
        n = self.n
        if len(set(colors)) == n:
            c = self.cert(colors)
            if self.best is None or c < self.best:
                self.best, self.best_perm = c, colors
            elif c == self.best:
                inv = [0] * n
                for v, p in enumerate(self.best_perm):
                    inv[p] = v
                self.autos.append([inv[colors[v]] for v in range(n)])
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        cell_color = min(c for c, s in sizes.items() if s > 1)
        cell = [v for v in range(n) if colors[v] == cell_color]
        tried: list[int] = []
        for v in cell:
            if tried and self._same_orbit(v, tried, fixed):
                continue
            tried.append(v)
            ind = [2 * c + (1 if c == cell_color and w != v else 0) for w, c in enumerate(colors)]
            self.search(self.refine(_rank(ind)), fixed + [v])

    def _same_orbit(self, v: int, tried: list[int], fixed: list[int]) -> bool:
        gens = [a for a in self.autos if all(a[x] == x for x in fixed)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in gens:
            for x in range(self.n):
                rx, ry = find(x), find(a[x])
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(t) == rv for t in tried)


def canonical_form(g: MultiGraph) -> tuple:
    """An isomorphism-invariant key: equal keys iff isomorphic graphs."""
    if g.n == 0:
        return (0, ())
    c = _Canon(g)
    c.search(c.refine(c.init), [])
    return (g.n, c.best)


def canonical_graph(g: MultiGraph) -> MultiGraph:
    n, edges = canonical_form(g)
    return MultiGraph(n, edges)


def are_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
