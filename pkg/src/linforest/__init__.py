"""Generalized Turán numbers of spanning linear forests: shifting, extremal
constructions, closed forms, and an exhaustive verifier."""

__version__ = "0.1.0"

from .graph import (BipartiteGraph, Graph, Graph6Error, complete_graph, disjoint_union,  # noqa: E402
                    empty_graph, encode_graph6, join, parse_graph6)
from .forest import (LinearForestStats, OracleCapError, is_linear_forest, is_lnk_free,  # noqa: E402
                     matching_number, max_linear_forest, min_vertex_cover_bipartite)
from .shifting import ShiftStep, is_shifted, shift, shift_closure  # noqa: E402
from .patterns import PatternSpec, count_bicliques, count_clique_stars, count_cliques  # noqa: E402
from .constructions import (build_extremal_bipartite, build_extremal_unrestricted,  # noqa: E402
                            build_Gstar, build_H)

__all__ = [
    "BipartiteGraph", "Graph", "Graph6Error", "complete_graph", "disjoint_union", "empty_graph",
    "encode_graph6", "join", "parse_graph6", "LinearForestStats", "OracleCapError",
    "is_linear_forest", "is_lnk_free", "matching_number", "max_linear_forest",
    "min_vertex_cover_bipartite", "ShiftStep", "is_shifted", "shift", "shift_closure",
    "PatternSpec", "count_bicliques", "count_clique_stars", "count_cliques",
    "build_extremal_bipartite", "build_extremal_unrestricted", "build_Gstar", "build_H",
]
