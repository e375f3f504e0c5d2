import itertools
import random

import networkx as nx
import pytest

from trigraph_mwss.errors import InvalidArgument
from trigraph_mwss.matching import (
    EdgeWeightedGraph,
    brute_max_weight_matching,
    matching_weight,
    max_weight_matching,
)


def random_graph(rng, n, p=0.4, wmax=100):
    return EdgeWeightedGraph.from_edges(
        n, ((u, v, rng.randint(0, wmax)) for u, v in itertools.combinations(range(n), 2) if rng.random() < p)
    )


def check(g):
    m, total = max_weight_matching(g)
    assert matching_weight(g, m.pairs) == total
    ends = [x for e in m.pairs for x in e]
    assert len(ends) == len(set(ends))
    assert [g.edge_list[i][:2] for i in m.edges] == [tuple(sorted(p)) for p in m.pairs]
    return total


def test_examples():
    tri = EdgeWeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert check(tri) == 1
    p4 = EdgeWeightedGraph.from_edges(4, [(0, 1, 1), (1, 2, 5), (2, 3, 1)])
    assert check(p4) == 5
    assert brute_max_weight_matching(EdgeWeightedGraph(4)) == 0 == check(EdgeWeightedGraph(4))
    assert brute_max_weight_matching(EdgeWeightedGraph.from_edges(2, [(0, 1, 9)])) == 9
    k4 = EdgeWeightedGraph.from_edges(4, ((u, v, 1) for u, v in itertools.combinations(range(4), 2)))
    assert brute_max_weight_matching(k4) == 2 == check(k4)


def test_parallel_edges_keep_the_heaviest():
    g = EdgeWeightedGraph.from_edges(2, [(0, 1, 3), (1, 0, 8), (0, 1, 5)])
    assert g.edges == {(0, 1): 8}
    with pytest.raises(InvalidArgument):
        g.add_edge(0, 0, 1)
    with pytest.raises(InvalidArgument):
        g.add_edge(0, 1, -1)


def test_against_brute_force():
    rng = random.Random(17)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 9), rng.choice((0.3, 0.5, 0.8)))
        assert check(g) == brute_max_weight_matching(g)


def test_against_networkx_on_larger_graphs():
    rng = random.Random(18)
    for _ in range(30):
        n = rng.randint(10, 40)
        g = random_graph(rng, n, 0.15, 1000)
        h = nx.Graph()
        h.add_weighted_edges_from(g.edge_list)
        ref = sum(h[u][v]["weight"] for u, v in nx.max_weight_matching(h))
        assert check(g) == ref


def test_scaling_and_zero_edges():
    rng = random.Random(19)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 10), 0.5, 30)
        base = check(g)
        scaled = EdgeWeightedGraph.from_edges(g.n, ((u, v, 7 * w) for u, v, w in g.edge_list))
        assert check(scaled) == 7 * base
        no_zero = EdgeWeightedGraph.from_edges(g.n, ((u, v, w) for u, v, w in g.edge_list if w))
        assert check(no_zero) == base
        extra = EdgeWeightedGraph.from_edges(g.n, g.edge_list)
        for u, v in itertools.combinations(range(g.n), 2):
            if (u, v) not in extra.edges and rng.random() < 0.3:
                extra.add_edge(u, v, 0)
        assert check(extra) == base
