"""Replacing a semi-adjacent pair with a gem.

For a semi pair ``uv`` three vertices are added: ``x_uv`` carrying ``w(uv)``,
``x_vu`` (adjacent to ``u``) carrying ``w(v,u)`` and ``x_uv_dir`` (adjacent
to ``v``) carrying ``w(u,v)``.  Together with ``u`` and ``v`` they induce a
gem: the path ``u - x_vu - x_uv_dir - v`` plus ``x_uv`` adjacent to all four.
``uv`` itself becomes strongly anti-adjacent.  The stability number is
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgument
from ..trigraph import SEMI, STRONG_ADJ, STRONG_ANTI, Trigraph
from ..weighting import WeightedTrigraph, WeightFunction


@dataclass(frozen=True)
class GemVertices:
    pair: tuple[int, int]  # (u, v) as replaced
    x_pair: int  # x_{uv}
    x_vu: int  # x_{v,u}, strongly adjacent to u
    x_uv: int  # x_{u,v}, strongly adjacent to v

    def gem_edges(self) -> list[tuple[int, int]]:
        u, v = self.pair
        return [
            (u, self.x_vu),
            (self.x_vu, self.x_uv),
            (self.x_uv, v),
            (self.x_pair, u),
            (self.x_pair, self.x_vu),
            (self.x_pair, self.x_uv),
            (self.x_pair, v),
        ]

    @property
    def members(self) -> tuple[int, int, int, int, int]:
        u, v = self.pair
        return (u, self.x_vu, self.x_uv, v, self.x_pair)


@dataclass(frozen=True)
class GemExpansion:
    result: WeightedTrigraph
    source_n: int
    gems: tuple[GemVertices, ...]

    @property
    def new_vertices(self) -> dict[tuple[int, int], tuple[int, int, int]]:
        return {gm.pair: (gm.x_pair, gm.x_vu, gm.x_uv) for gm in self.gems}

    @property
    def origin_map(self) -> dict[int, tuple[int, int]]:
        out = {}
        for gm in self.gems:
            for x in (gm.x_pair, gm.x_vu, gm.x_uv):
                out[x] = gm.pair
        return out


def _expand(wt: WeightedTrigraph, pairs: list[tuple[int, int]]) -> GemExpansion:
    g, w = wt.g, wt.w
    n = g.n
    k = len(pairs)
    theta = np.full((n + 3 * k, n + 3 * k), STRONG_ANTI, dtype=np.int8)
    theta[:n, :n] = g.theta
    vertex = list(w.vertex) + [0] * (3 * k)
    directed = dict(w.directed)
    pair = dict(w.pair)
    top = max(g.labels, default=-1)
    labels = list(g.labels)
    gems = []
    for i, (u, v) in enumerate(pairs):
        base = n + 3 * i
        gm = GemVertices((u, v), base, base + 1, base + 2)
        theta[u, v] = theta[v, u] = STRONG_ANTI
        for a, b in gm.gem_edges():
            theta[a, b] = theta[b, a] = STRONG_ADJ
        key = (u, v) if u < v else (v, u)
        vertex[gm.x_pair] = pair.pop(key, 0)
        vertex[gm.x_vu] = directed.pop((v, u), 0)
        vertex[gm.x_uv] = directed.pop((u, v), 0)
        labels += [top + 1, top + 2, top + 3]
        top += 3
        gems.append(gm)
    out = WeightedTrigraph(
        Trigraph(theta, tuple(labels)), WeightFunction(tuple(vertex), directed, pair)
    )
    return GemExpansion(out, n, tuple(gems))


def replace_gem(wt: WeightedTrigraph, uv: tuple[int, int]) -> GemExpansion:
    u, v = uv
    wt.g.check_vertex(u)
    wt.g.check_vertex(v)
    if u == v or wt.g.theta[u, v] != SEMI:
        raise InvalidArgument(f"{u}{v} is not a semi-adjacent pair")
    return _expand(wt, [(u, v)])


def replace_all_gems(wt: WeightedTrigraph) -> GemExpansion:
    """Replace every semi pair, lexicographically; the result is a graph.

    Equivalent to folding :func:`replace_gem` in that order (vertex indices
    are appended in the same sequence).
    """
    return _expand(wt, list(wt.g.semi_pairs))
