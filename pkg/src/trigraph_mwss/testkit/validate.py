"""Exhaustive ISK4 / wheel detection for small trigraphs.

Every realization is checked separately.  Within one realization all vertex
subsets are scored at once with numpy: a subset can be the vertex set of an
induced K4 subdivision only if every member has degree 2 or 3 inside it and
exactly four have degree 3, and it can be a hole only if it is 2-regular with
at least four vertices.  The (few) surviving candidates are confirmed in
plain Python.  Exponential by design; refuses inputs beyond the size limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import SizeLimitExceeded
from ..trigraph import STRONG_ADJ, Trigraph

MAX_VERTICES = 16
MAX_SEMI_PAIRS = 10


@dataclass(frozen=True)
class Obstruction:
    kind: str  # "isk4" or "wheel"
    vertices: tuple[int, ...]
    realization: tuple[tuple[int, int], ...]  # semi pairs realized as edges
    center: int | None = None


@lru_cache(maxsize=4)
def _popcount_table(n: int) -> np.ndarray:
    table = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        table[1 << i:1 << (i + 1)] = table[: 1 << i] + 1
    return table


def _is_k4_subdivision(mask: int, adj: list[int], degree3: list[int]) -> bool:
    branch = set(degree3)
    seen = set(degree3)
    pairs = set()
    for b in degree3:
        nb = adj[b] & mask
        while nb:
            low = nb & -nb
            nb ^= low
            prev, cur = b, low.bit_length() - 1
            while cur not in branch:
                seen.add(cur)
                nxt = adj[cur] & mask & ~(1 << prev)
                prev, cur = cur, nxt.bit_length() - 1
            if cur == b:
                return False
            pairs.add((min(b, cur), max(b, cur)))
    # each thread is traced from both ends: six distinct pairs and nothing left over
    return len(pairs) == 6 and len(seen) == bin(mask).count("1")


def _is_connected_cycle(mask: int, adj: list[int]) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adj[low.bit_length() - 1] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def find_obstruction_in_graph(n: int, adj: list[int]) -> Obstruction | None:
    """An induced K4 subdivision or wheel of the graph given by bitmask rows."""
    if n < 4:
        return None
    pc = _popcount_table(n)
    masks = np.arange(1 << n, dtype=np.int64)
    size = pc[masks]
    bad3 = np.zeros(1 << n, dtype=bool)
    bad2 = np.zeros(1 << n, dtype=bool)
    count3 = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        inside = ((masks >> v) & 1).astype(bool)
        deg = pc[masks & adj[v]]
        bad2 |= inside & (deg != 2)
        bad3 |= inside & ((deg < 2) | (deg > 3))
        count3 += (inside & (deg == 3)).astype(np.int8)
    for m in np.flatnonzero(~bad3 & (count3 == 4)).tolist():
        degree3 = [v for v in range(n) if (m >> v) & 1 and bin(adj[v] & m).count("1") == 3]
        if _is_k4_subdivision(m, adj, degree3):
            return Obstruction("isk4", tuple(v for v in range(n) if (m >> v) & 1), ())
    for m in np.flatnonzero(~bad2 & (size >= 4)).tolist():
        if not _is_connected_cycle(m, adj):
            continue
        for v in range(n):
            if not (m >> v) & 1 and bin(adj[v] & m).count("1") >= 3:
                return Obstruction(
                    "wheel", tuple(u for u in range(n) if (m >> u) & 1), (), center=v
                )
    return None


def find_obstruction(g: Trigraph) -> Obstruction | None:
    """First obstruction over all realizations (semi pairs as edges or not)."""
    n = g.n
    semi = g.semi_pairs
    if n > MAX_VERTICES:
        raise SizeLimitExceeded(f"validator handles n <= {MAX_VERTICES}, got {n}")
    if len(semi) > MAX_SEMI_PAIRS:
        raise SizeLimitExceeded(
            f"validator handles at most {MAX_SEMI_PAIRS} semi pairs, got {len(semi)}"
        )
    base = [0] * n
    for u, v in g.strong_pairs:
        base[u] |= 1 << v
        base[v] |= 1 << u
    for r in range(1 << len(semi)):
        adj = list(base)
        chosen = []
        for i, (u, v) in enumerate(semi):
            if (r >> i) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                chosen.append((u, v))
        found = find_obstruction_in_graph(n, adj)
        if found is not None:
            return Obstruction(found.kind, found.vertices, tuple(chosen), found.center)
    return None


def is_isk4_wheel_free(g: Trigraph) -> bool:
    return find_obstruction(g) is None


def graph_adjacency_masks(g: Trigraph) -> list[int]:
    adj = [0] * g.n
    for u in range(g.n):
        for v in np.flatnonzero(g.theta[u] == STRONG_ADJ).tolist():
            adj[u] |= 1 << v
    return adj
