"""Stability numbers of the three basic classes.

Classification order: series-parallel (full realization has treewidth <= 2),
then complete bipartite graph, otherwise line trigraph.  The last case is
not checked positively; a failed root reconstruction reports it.
"""

from __future__ import annotations

import enum

import numpy as np

from ..errors import InvalidArgument, NotSeriesParallel
from ..matching import EdgeWeightedGraph, max_weight_matching
from ..trigraph import STRONG_ADJ, STRONG_ANTI, Trigraph
from ..weighting import WeightedTrigraph
from .gem import GemExpansion, GemVertices, replace_all_gems, replace_gem
from .lineroot import LineRoot, line_graph_of, line_graph_root
from .treedecomp import (
    TreeDecomposition,
    augment_decomposition_for_gems,
    mwss_on_tree_decomposition,
    tree_decomposition_problems,
    tree_decomposition_width2,
)


class BasicClass(str, enum.Enum):
    SERIES_PARALLEL = "series-parallel"
    COMPLETE_BIPARTITE = "complete-bipartite"
    LINE = "line"


def is_series_parallel(g: Trigraph) -> bool:
    try:
        tree_decomposition_width2(g)
    except NotSeriesParallel:
        return False
    return True


def complete_bipartition(g: Trigraph) -> tuple[list[int], list[int]] | None:
    """``(A, B)`` with ``A = N(0)`` if ``g`` is a complete bipartite graph."""
    if not g.is_graph() or g.n == 0:
        return None
    theta = g.theta
    a = np.flatnonzero(theta[0] == STRONG_ADJ)
    b = np.flatnonzero(theta[0] != STRONG_ADJ)
    off = ~np.eye(g.n, dtype=bool)
    if (theta[np.ix_(a, a)][off[np.ix_(a, a)]] != STRONG_ANTI).any():
        return None
    if (theta[np.ix_(b, b)][off[np.ix_(b, b)]] != STRONG_ANTI).any():
        return None
    if (theta[np.ix_(a, b)] != STRONG_ADJ).any():
        return None
    return a.tolist(), b.tolist()


def classify_basic(g: Trigraph) -> BasicClass:
    if is_series_parallel(g):
        return BasicClass.SERIES_PARALLEL
    if complete_bipartition(g) is not None:
        return BasicClass.COMPLETE_BIPARTITE
    return BasicClass.LINE


def alpha_series_parallel(wt: WeightedTrigraph) -> int:
    td = tree_decomposition_width2(wt.g)
    exp = replace_all_gems(wt)
    td = augment_decomposition_for_gems(td, exp)
    res = exp.result
    return mwss_on_tree_decomposition(res.g, res.w.vertex, td)


def alpha_complete_bipartite(wt: WeightedTrigraph) -> int:
    if wt.g.semi_pairs:
        raise InvalidArgument("a complete bipartite trigraph has no semi-adjacent pairs")
    if wt.n == 0:
        return 0
    parts = complete_bipartition(wt.g)
    if parts is None:
        raise InvalidArgument("not a complete bipartite graph")
    a, b = parts
    vw = wt.w.vertex
    return max(sum(vw[v] for v in a), sum(vw[v] for v in b))


def alpha_line(wt: WeightedTrigraph) -> int:
    """Maximum-weight matching in a root of the gem expansion."""
    res = replace_all_gems(wt).result
    root = line_graph_root(res.g)
    h = EdgeWeightedGraph.from_edges(
        root.h_order, ((a, b, res.w.vertex[i]) for i, (a, b) in enumerate(root.edges))
    )
    return max_weight_matching(h)[1]


_SOLVERS = {
    BasicClass.SERIES_PARALLEL: alpha_series_parallel,
    BasicClass.COMPLETE_BIPARTITE: alpha_complete_bipartite,
    BasicClass.LINE: alpha_line,
}


def alpha_basic(wt: WeightedTrigraph, cls: BasicClass | None = None) -> int:
    if cls is None:
        cls = classify_basic(wt.g)
    return _SOLVERS[cls](wt)


__all__ = [
    "BasicClass",
    "GemExpansion",
    "GemVertices",
    "LineRoot",
    "TreeDecomposition",
    "alpha_basic",
    "alpha_complete_bipartite",
    "alpha_line",
    "alpha_series_parallel",
    "augment_decomposition_for_gems",
    "classify_basic",
    "complete_bipartition",
    "is_series_parallel",
    "line_graph_of",
    "line_graph_root",
    "mwss_on_tree_decomposition",
    "replace_all_gems",
    "replace_gem",
    "tree_decomposition_problems",
    "tree_decomposition_width2",
]
