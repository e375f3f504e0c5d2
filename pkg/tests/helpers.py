"""Small builders shared by the test modules."""

from __future__ import annotations

import itertools
import random

from trigraph_mwss.testkit import random_weights
from trigraph_mwss.trigraph import Trigraph
from trigraph_mwss.weighting import WeightedTrigraph


def random_trigraph(rng: random.Random, n: int, p_strong: float = 0.35, p_semi: float = 0.2) -> Trigraph:
    strong, semi = [], []
    for u, v in itertools.combinations(range(n), 2):
        x = rng.random()
        if x < p_strong:
            strong.append((u, v))
        elif x < p_strong + p_semi:
            semi.append((u, v))
    return Trigraph.from_pairs(n, strong, semi)


def random_weighted(rng: random.Random, n: int, weight_max: int = 20, **kw) -> WeightedTrigraph:
    return random_weights(rng, random_trigraph(rng, n, **kw), weight_max)


def random_subset(rng: random.Random, n: int, p: float = 0.5) -> frozenset[int]:
    return frozenset(v for v in range(n) if rng.random() < p)


def cycle(n: int) -> Trigraph:
    return Trigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Trigraph:
    return Trigraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Trigraph:
    return Trigraph.from_pairs(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Trigraph:
    return Trigraph.from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(k: int) -> Trigraph:
    """Hole of length ``k`` on ``0..k-1`` plus the center ``k``."""
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return Trigraph.from_pairs(k + 1, edges)


def two_c6_on_stable_pair() -> Trigraph:
    """Two 6-holes glued on the non-adjacent pair {0, 3}."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(0, 6), (6, 7), (7, 3), (3, 8), (8, 9), (9, 0)]
    return Trigraph.from_pairs(10, edges)


def two_c6_on_vertex() -> Trigraph:
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(0, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 0)]
    return Trigraph.from_pairs(11, edges)


def all_graphs(n: int):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Trigraph.from_pairs(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
