"""Odd edge-colorings of subdivided odd multigraphs.

An edge-coloring is odd when every color appears an odd number of times
(or not at all) at every vertex. For connected subdivisions of odd graphs
the package decides the least number of colors, builds an optimal coloring,
and checks both against an exhaustive solver.
"""

from .classifier import ChiReport, classify, color3, color4_singleton, color_optimal, witness_edge
from .coloring import EdgeColoring, verify_odd
from .multigraph import MultiGraph

__all__ = [
    "ChiReport",
    "EdgeColoring",
    "MultiGraph",
    "classify",
    "color3",
    "color4_singleton",
    "color_optimal",
    "verify_odd",
    "witness_edge",
]
