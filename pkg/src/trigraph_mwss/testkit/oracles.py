"""Exact reference solvers that share no code with the decomposition solver."""

from __future__ import annotations

from functools import lru_cache

from ..errors import InvalidArgument, SizeLimitExceeded
from ..trigraph import Trigraph
from ..weighting import WeightedTrigraph, alpha_by_enumeration

BRUTE_LIMIT = 16


def brute_alpha(wt: WeightedTrigraph, limit: int = BRUTE_LIMIT) -> int:
    """Maximum of the set weight over all stable sets (exhaustive)."""
    if wt.n > limit:
        raise SizeLimitExceeded(f"brute force refused: n = {wt.n} > {limit}")
    return alpha_by_enumeration(wt)


def graph_alpha_branching(g: Trigraph, weights=None) -> int:
    """Maximum-weight independent set of a graph by exhaustive branching.

    Branches on a vertex of maximum degree (take it or drop it), splits into
    connected components and memoises on the remaining vertex set; isolated
    vertices are taken outright.  Exponential in the worst case but quick on
    the sparse graphs produced by the subdivision constructions.
    """
    if g.semi_pairs:
        raise InvalidArgument("expected a graph (no semi-adjacent pairs)")
    n = g.n
    w = [1] * n if weights is None else list(weights)
    adj = [0] * n
    for u, v in g.strong_pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def component(mask: int) -> int:
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        return seen

    @lru_cache(maxsize=None)
    def solve(mask: int) -> int:
        if not mask:
            return 0
        comp = component(mask)
        if comp != mask:
            return solve(comp) + solve(mask & ~comp)
        best_v, best_d = -1, -1
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            d = bin(adj[v] & mask).count("1")
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 0:
            return w[best_v]
        v = best_v
        drop = solve(mask & ~(1 << v))
        take = w[v] + solve(mask & ~(1 << v) & ~adj[v])
        return max(drop, take)

    return solve((1 << n) - 1)
