"""Recovering a root graph ``H`` with ``L(H) = G``.

Vertices of ``G`` are placed one at a time in breadth-first order, each as an
edge of ``H``.  A vertex ``e`` with an already placed neighbour ``f = pq``
must share ``p`` or ``q``; its other endpoint is then forced to be a fresh
vertex, or one common to every placed neighbour that avoids the shared
endpoint.  A candidate is kept only if the placed edges touching it are
exactly the placed neighbours of ``e``.  Ambiguity (the triangle/claw
phenomenon and a few four-vertex cases) can only arise among the first few
placements of each component, so the search backtracks but almost never far.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..errors import NotLineGraph
from ..trigraph import Trigraph


@dataclass(frozen=True)
class LineRoot:
    """``edges[i]`` is the edge of ``H`` representing vertex ``i`` of ``G``."""

    h_order: int
    edges: tuple[tuple[int, int], ...]

    def line_graph_edges(self) -> set[tuple[int, int]]:
        return line_graph_of(self.edges)


def line_graph_of(edges) -> set[tuple[int, int]]:
    """Adjacent pairs ``(i, j)``, ``i < j``, of the line graph of an edge list."""
    by_end: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(edges):
        by_end.setdefault(a, []).append(i)
        by_end.setdefault(b, []).append(i)
    out = set()
    for ids in by_end.values():
        for x in range(len(ids)):
            for y in range(x + 1, len(ids)):
                i, j = ids[x], ids[y]
                out.add((min(i, j), max(i, j)))
    return out


def _bfs_order(nbrs, n) -> list[tuple[int, bool]]:
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        out.append((s, True))
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for u in sorted(nbrs[v]):
                if not seen[u]:
                    seen[u] = True
                    out.append((u, False))
                    dq.append(u)
    return out


def line_graph_root(g: Trigraph) -> LineRoot:
    """Root of the full realization of ``g``; :class:`NotLineGraph` if none."""
    n = g.n
    nbrs = g.neighbors
    order = _bfs_order(nbrs, n)
    pos = [0] * n
    for i, (v, _) in enumerate(order):
        pos[v] = i
    ends: list[tuple[int, int] | None] = [None] * n
    inc: dict[int, set[int]] = {}
    counter = 0
    saved_counter = [0] * n
    cands: list[list[tuple[int, int]] | None] = [None] * n
    tried = [0] * n
    NEW = -1

    def candidates(p: int) -> list[tuple[int, int]]:
        e, is_root = order[p]
        if is_root:
            return [(NEW, NEW)]
        placed = [u for u in nbrs[e] if pos[u] < p]
        placed_set = set(placed)
        f = min(placed, key=pos.__getitem__)
        out = []
        for a in ends[f]:
            rest = [u for u in placed if a not in ends[u]]
            if not rest:
                options = [NEW]
            else:
                common = set(ends[rest[0]])
                for u in rest[1:]:
                    common &= set(ends[u])
                common.discard(a)
                options = sorted(common)
            for y in options:
                touching = set(inc[a])
                if y != NEW:
                    if inc[a] & inc[y]:
                        continue  # would duplicate an edge of H
                    touching |= inc[y]
                if touching == placed_set:
                    out.append((a, y))
        return out

    p = 0
    while p < n:
        if cands[p] is None:
            cands[p] = candidates(p)
            tried[p] = 0
        if tried[p] < len(cands[p]):
            a, b = cands[p][tried[p]]
            tried[p] += 1
            saved_counter[p] = counter
            if a == NEW:
                a, counter = counter, counter + 1
            if b == NEW:
                b, counter = counter, counter + 1
            e = order[p][0]
            ends[e] = (a, b)
            inc.setdefault(a, set()).add(e)
            inc.setdefault(b, set()).add(e)
            p += 1
            continue
        cands[p] = None
        p -= 1
        if p < 0:
            raise NotLineGraph("the graph is not a line graph")
        e = order[p][0]
        for x in ends[e]:
            inc[x].discard(e)
            if not inc[x]:
                del inc[x]
        ends[e] = None
        counter = saved_counter[p]
    return LineRoot(counter, tuple(ends))
