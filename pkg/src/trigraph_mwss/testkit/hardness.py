"""Constructions relating the stability number of an arbitrary graph to that
of restricted instances: double subdivision, 2-extension, extended bipartite
graphs, and the all-semi bipartite trigraph with its arc contributions.
Each comes with an identity checked by brute force in the test suite."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidArgument
from ..trigraph import Trigraph, induced
from ..weighting import WeightedTrigraph, WeightFunction, set_weight


def _require_graph(h: Trigraph) -> None:
    if h.semi_pairs:
        raise InvalidArgument("expected a graph (no semi-adjacent pairs)")


def poljak_double_subdivision(h: Trigraph) -> Trigraph:
    """Replace every edge ``uv`` by a path ``u - a - b - v``.

    The result has ``alpha = alpha(h) + |E(h)|`` and no wheel."""
    _require_graph(h)
    n = h.n
    edges = []
    nxt = n
    for u, v in h.strong_pairs:
        a, b = nxt, nxt + 1
        nxt += 2
        edges += [(u, a), (a, b), (b, v)]
    return Trigraph.from_pairs(nxt, edges)


@dataclass(frozen=True)
class TwoExtension:
    graph: Trigraph
    path: tuple[int, int, int, int]  # x1..x4, with x1 next to a and x4 next to b
    apex: int
    index_map: dict[int, int]  # old vertex -> new vertex (v itself is gone)


def two_extension(g: Trigraph, v: int) -> TwoExtension:
    """Delete the degree-2 vertex ``v`` (neighbours ``a < b`` non-adjacent),
    add a path ``a - x1 - x2 - x3 - x4 - b`` and an apex ``x`` adjacent to
    ``x1..x4``."""
    _require_graph(g)
    g.check_vertex(v)
    nb = g.neighbors[v]
    if len(nb) != 2:
        raise InvalidArgument(f"vertex {v} has degree {len(nb)}, not 2")
    a, b = sorted(nb)
    if g.theta[a, b] == 1:
        raise InvalidArgument(f"the neighbours {a} and {b} of {v} are adjacent")
    keep = [u for u in range(g.n) if u != v]
    sub, index = induced(g, keep)
    m = sub.n
    x1, x2, x3, x4, x = range(m, m + 5)
    edges = list(sub.strong_pairs)
    edges += [(index[a], x1), (x1, x2), (x2, x3), (x3, x4), (x4, index[b])]
    edges += [(x, y) for y in (x1, x2, x3, x4)]
    return TwoExtension(Trigraph.from_pairs(m + 5, edges), (x1, x2, x3, x4), x, index)


def subdivide_once(h: Trigraph) -> tuple[Trigraph, list[int]]:
    """Subdivide every edge once; returns the graph and the new vertices."""
    _require_graph(h)
    edges = []
    added = []
    for i, (u, v) in enumerate(h.strong_pairs):
        s = h.n + i
        added.append(s)
        edges += [(u, s), (s, v)]
    return Trigraph.from_pairs(h.n + len(added), edges), added


def extended_bipartite(h: Trigraph) -> Trigraph:
    """Subdivide every edge once, then 2-extend every subdivision vertex.

    ``alpha`` of the result is ``alpha(h) + 2 |E(h)|``."""
    b, added = subdivide_once(h)
    pending = list(added)
    g = b
    while pending:
        v = pending.pop()
        ext = two_extension(g, v)
        g = ext.graph
        pending = [ext.index_map[u] for u in pending]
    return g


# -- the bipartite trigraph with arc weights -----------------------------


@dataclass(frozen=True)
class HardnessInstance:
    wt: WeightedTrigraph
    source: Trigraph
    arcs: tuple[tuple[int, int], ...]  # orientation of every edge of ``source``
    subdivision_map: dict[tuple[int, int], int]  # arc -> its subdivision vertex


def bipartite_trigraph_hardness(h: Trigraph) -> HardnessInstance:
    """All-semi subdivision of ``h`` with the arc weights; edges are oriented
    from the smaller to the larger vertex.  ``alpha = alpha(h) + 2 |E(h)|``."""
    _require_graph(h)
    n = h.n
    arcs = tuple(h.strong_pairs)
    sub = {arc: n + i for i, arc in enumerate(arcs)}
    semi = []
    directed, pair = {}, {}
    for (u, v), x in sub.items():
        semi += [(u, x), (v, x)]
        pair[(u, x)] = 1
        pair[(v, x)] = 1
        directed[(x, v)] = 1
        directed[(v, x)] = 1
    g = Trigraph.from_pairs(n + len(arcs), (), semi)
    wt = WeightedTrigraph.make(g, [1] * g.n, directed, pair)
    return HardnessInstance(wt, h, arcs, sub)


def arc_contribution(inst: HardnessInstance, arc: tuple[int, int], s) -> int:
    """Weight of ``S`` restricted to ``{u, x_uv, v}`` minus the weights of
    ``u`` and ``v`` in ``S``."""
    if arc not in inst.subdivision_map:
        raise InvalidArgument(f"{arc} is not an arc of the instance")
    u, v = arc
    x = inst.subdivision_map[arc]
    ss = inst.wt.g.check_subset(s)
    three = [u, v, x]
    sub, index = induced(inst.wt.g, three)
    order = sorted(three)
    local = WeightedTrigraph(sub, inst.wt.w.restrict(order))
    inside = [index[y] for y in three if y in ss]
    return set_weight(local, inside) - sum(inst.wt.w.vertex[y] for y in (u, v) if y in ss)


def unit_weights(g: Trigraph) -> WeightedTrigraph:
    return WeightedTrigraph(g, WeightFunction((1,) * g.n))
