"""Exhaustive agreement run: classifier against the exact oracle on every
small connected class member."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .classifier import classify, witness_edge
from .coloring import verify_odd
from .multigraph import MultiGraph
from .oracle import FOUND, SearchConfig, chi, enumerate_S


@dataclass
class CensusResult:
    counts: Counter = field(default_factory=Counter)       # (n, m, chi) -> graphs
    total: int = 0
    disagreements: list = field(default_factory=list)      # (graph, classifier chi, oracle chi)
    inconclusive: list = field(default_factory=list)
    witness_failures: list = field(default_factory=list)
    witnesses_checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.inconclusive or self.witness_failures)


def check_graph(g: MultiGraph, cfg: SearchConfig = SearchConfig()) -> tuple:
    """``(classifier chi, oracle chi or None, witness verdict or None)``."""
    rep = classify(g)
    res = chi(g, cfg)
    wit = None
    if rep.chi == 4:
        try:
            e, col = witness_edge(g)
            wit = bool(verify_odd(col)) and col.k <= 3
        except Exception:
            wit = False
    return rep.chi, (res.chi if res.status == FOUND else None), wit


def _check_edges(args):
    n, edges, cfg = args
    return check_graph(MultiGraph(n, edges), cfg)


def default_workers() -> int:
    raw = os.environ.get("ODDCHROME_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_census(max_m: int, max_n: Optional[int] = None, cfg: SearchConfig = SearchConfig(),
               workers: Optional[int] = None) -> CensusResult:
    workers = default_workers() if workers is None else workers
    graphs = list(enumerate_S(max_n if max_n is not None else max_m + 1, max_m))
    jobs = [(g.n, g.edges, cfg) for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_edges, jobs, chunksize=32))
    else:
        results = [_check_edges(j) for j in jobs]
    out = CensusResult()
    for g, (ours, exact, wit) in zip(graphs, results):
        out.total += 1
        out.counts[(g.n, g.m, ours)] += 1
        if exact is None:
            out.inconclusive.append(g)
        elif exact != ours:
            out.disagreements.append((g, ours, exact))
        if wit is not None:
            out.witnesses_checked += 1
            if not wit:
                out.witness_failures.append(g)
    return out
