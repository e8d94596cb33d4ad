from __future__ import annotations

import itertools
import random
from collections import Counter

from hypothesis import strategies as st

from oddchrome.multigraph import MultiGraph


def brute_force_chi(g: MultiGraph, max_k: int = 6):
    """Smallest k admitting an odd k-coloring, by trying every assignment.

    Deliberately naive: shares no code with the pruned search.
    """
    if g.m == 0:
        return 0
    for k in range(1, max_k + 1):
        for colors in itertools.product(range(k), repeat=g.m):
            cnt = Counter()
            for (u, v), c in zip(g.edges, colors):
                cnt[(u, c)] += 1
                cnt[(v, c)] += 1
            if all(x % 2 == 1 for x in cnt.values()):
                return k
    return None


def is_odd_assignment(g: MultiGraph, colors) -> bool:
    cnt = Counter()
    for (u, v), c in zip(g.edges, colors):
        cnt[(u, c)] += 1
        cnt[(v, c)] += 1
    return all(x % 2 == 1 for x in cnt.values())


def random_connected(rng: random.Random, n: int, extra: int, loops: bool = False) -> MultiGraph:
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    for _ in range(extra):
        a = rng.randrange(n)
        b = a if loops and rng.random() < 0.15 else rng.randrange(n)
        if a == b and not loops:
            continue
        edges.append((a, b))
    rng.shuffle(edges)
    return MultiGraph(n, tuple(edges))


def random_forest(rng: random.Random, n: int) -> MultiGraph:
    edges = [(i, rng.randrange(i)) for i in range(1, n) if rng.random() < 0.85]
    perm = list(range(n))
    rng.shuffle(perm)
    return MultiGraph(n, tuple((perm[a], perm[b]) for a, b in edges))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def multigraphs(draw, max_n: int = 8, max_m: int = 14, loops: bool = True):
    n = draw(st.integers(1, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    edges = draw(st.lists(pair, max_size=max_m))
    if not loops:
        edges = [(a, b) for a, b in edges if a != b]
    return MultiGraph(n, tuple(edges))


@st.composite
def connected_multigraphs(draw, max_n: int = 9, max_extra: int = 10, loops: bool = False):
    rng = random.Random(draw(seeds))
    return random_connected(rng, draw(st.integers(1, max_n)), draw(st.integers(0, max_extra)), loops)


@st.composite
def forests(draw, max_n: int = 14):
    return random_forest(random.Random(draw(seeds)), draw(st.integers(1, max_n)))
