import random

import networkx as nx
import pytest

from helpers import complete_bipartite, cycle, path, random_trigraph
from trigraph_mwss.errors import InvalidArgument
from trigraph_mwss.trigraph import (
    Adjacency,
    Trigraph,
    adjacency,
    articulation_points,
    components,
    delete,
    full_realization,
    induced,
    is_connected,
    is_cutset,
    is_narrow_path_between,
    is_stable_set,
    is_strong_clique,
    narrow_path,
    null_realization,
    realizations,
)


def test_adjacency_reads_theta():
    g = Trigraph.from_pairs(3, [(0, 2)], [(0, 1)])
    assert adjacency(g, 0, 1) is Adjacency.SEMI
    assert adjacency(g, 2, 0) is Adjacency.STRONG_ADJ
    assert adjacency(g, 1, 2) is Adjacency.STRONG_ANTI


@pytest.mark.parametrize("u, v", [(0, 0), (0, 5), (-1, 1)])
def test_adjacency_rejects_bad_pairs(u, v):
    g = Trigraph.from_pairs(2, [], [(0, 1)])
    with pytest.raises(InvalidArgument):
        adjacency(g, u, v)


def test_full_realization_has_no_semi_pairs():
    rng = random.Random(3)
    for _ in range(20):
        g = random_trigraph(rng, 7)
        f = full_realization(g)
        assert not f.semi_pairs
        assert len(f.strong_pairs) == len(g.strong_pairs) + len(g.semi_pairs)
        assert len(null_realization(g).strong_pairs) == len(g.strong_pairs)


def test_duplicate_pairs_rejected():
    with pytest.raises(InvalidArgument):
        Trigraph.from_pairs(3, [(0, 1)], [(1, 0)])


def test_realizations_count_and_content():
    g = Trigraph.from_pairs(4, [(0, 1)], [(1, 2), (2, 3)])
    reals = list(realizations(g))
    assert len(reals) == 4
    assert {len(r.strong_pairs) for r in reals} == {1, 2, 3}
    assert all(r.is_graph() for r in reals)


def test_induced_keeps_labels_and_order():
    g = cycle(6).with_labels(range(10, 16))
    sub, index = induced(g, [5, 1, 0])
    assert sub.labels == (10, 11, 15)
    assert index == {0: 0, 1: 1, 5: 2}
    assert sorted(sub.strong_pairs) == [(0, 1), (0, 2)]
    rest, _ = delete(g, [0])
    assert rest.n == 5 and len(rest.strong_pairs) == 4


def test_components_use_full_realization():
    g = Trigraph.from_pairs(4, [(0, 1)], [(2, 3)])
    assert components(g) == [frozenset({0, 1}), frozenset({2, 3})]
    assert not is_connected(g)
    assert is_connected(Trigraph.from_pairs(2, [], [(0, 1)]))
    assert not is_connected(Trigraph.null())


def test_articulation_points_match_networkx():
    rng = random.Random(11)
    for _ in range(60):
        g = random_trigraph(rng, rng.randint(2, 12), 0.2, 0.05)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(full_realization(g).strong_pairs)
        assert articulation_points(g) == set(nx.articulation_points(h))


def test_cutsets_on_a_path_and_a_cycle():
    p = path(5)
    assert is_cutset(p, [2])
    assert not is_cutset(p, [0])
    c = cycle(6)
    assert not is_cutset(c, [0])
    assert is_cutset(c, [0, 3])


def test_narrow_path_is_induced_path():
    c = cycle(7)
    p = narrow_path(c, 0, 3)
    assert p == frozenset({0, 1, 2, 3})
    assert is_narrow_path_between(c, p, 0, 3)
    assert not is_narrow_path_between(c, range(7), 0, 3)
    assert narrow_path(Trigraph.from_pairs(3, [(0, 1)]), 0, 2) is None


def test_stable_and_clique_predicates():
    g = Trigraph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    assert is_strong_clique(g, [0, 1, 2])
    assert not is_stable_set(g, [0, 1])
    h = Trigraph.from_pairs(3, [(0, 1)], [(1, 2)])
    assert is_stable_set(h, [1, 2])  # semi pairs are allowed inside a stable set
    assert not is_strong_clique(h, [1, 2])
    assert is_stable_set(complete_bipartite(2, 2), [0, 1])
