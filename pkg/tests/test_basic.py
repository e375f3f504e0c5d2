import itertools
import random

import pytest

from helpers import complete, complete_bipartite, cycle, path, random_weighted
from trigraph_mwss.basic import (
    BasicClass,
    TreeDecomposition,
    alpha_basic,
    alpha_complete_bipartite,
    alpha_line,
    alpha_series_parallel,
    augment_decomposition_for_gems,
    classify_basic,
    complete_bipartition,
    line_graph_of,
    line_graph_root,
    mwss_on_tree_decomposition,
    replace_all_gems,
    replace_gem,
)
from trigraph_mwss.basic.treedecomp import tree_decomposition_problems, tree_decomposition_width2
from trigraph_mwss.errors import InvalidArgument, NotLineGraph, NotSeriesParallel
from trigraph_mwss.testkit import GeneratorConfig, gen_instances, random_weights
from trigraph_mwss.testkit.generators import random_line_root, random_series_parallel
from trigraph_mwss.trigraph import STRONG_ADJ, Trigraph, full_realization
from trigraph_mwss.weighting import WeightedTrigraph, alpha_by_enumeration

# -- gem replacement -------------------------------------------------------


def semi_edge(wu, wv, d_uv=0, d_vu=0, p=0):
    g = Trigraph.from_pairs(2, [], [(0, 1)])
    d = {k: x for k, x in {(0, 1): d_uv, (1, 0): d_vu}.items() if x}
    return WeightedTrigraph.make(g, [wu, wv], d, {(0, 1): p} if p else {})


def test_gem_on_unit_pair():
    exp = replace_gem(semi_edge(1, 1), (0, 1))
    res = exp.result
    assert res.n == 5 and res.g.is_graph()
    assert res.w.vertex == (1, 1, 0, 0, 0)
    assert alpha_by_enumeration(res) == 2


def test_gem_carries_pair_weights():
    exp = replace_gem(semi_edge(0, 0, d_uv=2, d_vu=3, p=5), (0, 1))
    gm = exp.gems[0]
    w = exp.result.w.vertex
    assert (w[gm.x_pair], w[gm.x_vu], w[gm.x_uv]) == (5, 3, 2)
    assert not exp.result.w.pair and not exp.result.w.directed
    assert alpha_by_enumeration(exp.result) == 5
    assert exp.origin_map == {gm.x_pair: (0, 1), gm.x_vu: (0, 1), gm.x_uv: (0, 1)}
    assert exp.new_vertices == {(0, 1): (gm.x_pair, gm.x_vu, gm.x_uv)}


def test_gem_adjacency_is_exact():
    rng = random.Random(8)
    for _ in range(50):
        wt = random_weighted(rng, 6, p_semi=0.3)
        if not wt.g.semi_pairs:
            continue
        exp = replace_all_gems(wt)
        theta = exp.result.g.theta
        for gm in exp.gems:
            edges = {frozenset(e) for e in gm.gem_edges()}
            assert len(edges) == 7
            for a, b in itertools.combinations(gm.members, 2):
                assert (theta[a, b] == STRONG_ADJ) == (frozenset((a, b)) in edges)


def test_gem_rejects_non_semi_pair():
    wt = WeightedTrigraph.unweighted(path(3))
    with pytest.raises(InvalidArgument):
        replace_gem(wt, (0, 1))
    with pytest.raises(InvalidArgument):
        replace_gem(wt, (0, 2))


def test_full_expansion_counts_and_identity():
    wt = WeightedTrigraph.unweighted(cycle(5))
    assert replace_all_gems(wt).result == wt
    rng = random.Random(5)
    for _ in range(30):
        wt = random_weighted(rng, 6, p_semi=0.3)
        exp = replace_all_gems(wt)
        assert exp.result.n == wt.n + 3 * len(wt.g.semi_pairs)
        assert exp.result.g.is_graph()


def test_gem_order_does_not_matter():
    rng = random.Random(6)
    done = 0
    while done < 40:
        wt = random_weighted(rng, 6, p_semi=0.25)
        pairs = list(wt.g.semi_pairs)
        if not 1 <= len(pairs) <= 3:
            continue
        expected = alpha_by_enumeration(wt)
        for order in itertools.permutations(pairs):
            cur = wt
            for u, v in order:
                # vertex indices are stable because new vertices are appended
                cur = replace_gem(cur, (u, v)).result
            assert alpha_by_enumeration(cur) == expected
        done += 1


# -- tree decompositions ---------------------------------------------------


def test_td_examples():
    tri = complete(3)
    td = tree_decomposition_width2(tri)
    assert td.width == 2 and not tree_decomposition_problems(3, tri.strong_pairs, td)
    tree = Trigraph.from_pairs(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    assert tree_decomposition_width2(tree).width == 1
    with pytest.raises(NotSeriesParallel):
        tree_decomposition_width2(complete(4))


def test_td_augmentation_single_pair():
    wt = semi_edge(1, 1)
    td = tree_decomposition_width2(wt.g)
    exp = replace_all_gems(wt)
    aug = augment_decomposition_for_gems(td, exp)
    assert len(aug.bags) == len(td.bags) + 2
    assert aug.width == 3
    assert not tree_decomposition_problems(5, exp.result.g.strong_pairs, aug)
    same = augment_decomposition_for_gems(td, replace_all_gems(WeightedTrigraph.unweighted(path(2))))
    assert same.bags == td.bags


def test_td_augmentation_on_generated_series_parallel():
    rng = random.Random(12)
    for _ in range(100):
        sk = random_series_parallel(rng, rng.randint(3, 12))
        semi = [e for e in sorted(sk.strong) if rng.random() < 0.3]
        g = Trigraph.from_pairs(sk.n, sorted(sk.strong - set(semi)), semi)
        wt = random_weights(rng, g, 15)
        td = tree_decomposition_width2(g)
        assert td.width <= 2
        exp = replace_all_gems(wt)
        aug = augment_decomposition_for_gems(td, exp)
        assert aug.width <= max(td.width, 3)
        assert not tree_decomposition_problems(exp.result.n, exp.result.g.strong_pairs, aug)


def test_td_dp_examples():
    one = Trigraph.from_pairs(1)
    assert mwss_on_tree_decomposition(one, [7], TreeDecomposition([frozenset({0})], [[]])) == 7
    edge = path(2)
    assert mwss_on_tree_decomposition(edge, [3, 4], tree_decomposition_width2(edge)) == 4
    with pytest.raises(InvalidArgument):
        mwss_on_tree_decomposition(edge, [3, 4], TreeDecomposition([frozenset({0}), frozenset({1})], [[1], [0]]))


def test_td_problems_reports_broken_trees():
    g = path(3)
    bad = TreeDecomposition([frozenset({0, 1}), frozenset({2}), frozenset({1})], [[1], [0, 2], [1]])
    problems = tree_decomposition_problems(3, g.strong_pairs, bad)
    assert problems  # vertex 1 is split and edge 12 is uncovered


# -- classification and the three solvers ----------------------------------


def test_classify_examples():
    assert classify_basic(cycle(5)) is BasicClass.SERIES_PARALLEL
    assert classify_basic(complete_bipartite(3, 3)) is BasicClass.COMPLETE_BIPARTITE
    assert classify_basic(complete(5)) is BasicClass.LINE  # L(K_{1,5})


def test_complete_bipartite_examples():
    k23 = WeightedTrigraph.unweighted(complete_bipartite(2, 3))
    assert alpha_complete_bipartite(k23) == 3
    assert alpha_complete_bipartite(WeightedTrigraph.make(complete_bipartite(1, 1), [5, 2])) == 5
    k33 = WeightedTrigraph.make(complete_bipartite(3, 3), [3, 3, 4, 4, 4, 4])
    assert alpha_complete_bipartite(k33) == 12
    assert complete_bipartition(cycle(5)) is None
    with pytest.raises(InvalidArgument):
        alpha_complete_bipartite(WeightedTrigraph.unweighted(cycle(5)))
    with pytest.raises(InvalidArgument):
        alpha_complete_bipartite(semi_edge(1, 1))


def test_series_parallel_examples():
    assert alpha_series_parallel(WeightedTrigraph.unweighted(cycle(5))) == 2
    assert alpha_series_parallel(semi_edge(1, 1)) == 2


def test_line_graph_root_examples():
    tri = complete(3)
    root = line_graph_root(tri)
    assert root.line_graph_edges() == set(tri.strong_pairs)
    p3 = path(3)
    r = line_graph_root(p3)
    assert r.line_graph_edges() == set(p3.strong_pairs)
    assert r.h_order == 4
    claw = complete_bipartite(1, 3)
    with pytest.raises(NotLineGraph):
        line_graph_root(claw)


@pytest.mark.parametrize(
    "edges",
    [
        # the nine forbidden induced subgraphs include these small ones
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],  # K_{2,3}
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4), (1, 3)] + [(0, 5)],
        list(itertools.combinations(range(5), 2))[:-1] + [],  # K5 minus an edge
    ],
)
def test_non_line_graphs(edges):
    n = 1 + max(max(e) for e in edges)
    g = Trigraph.from_pairs(n, edges)
    with pytest.raises(NotLineGraph):
        line_graph_root(g)


def test_alpha_line_examples():
    g = WeightedTrigraph.make(path(3), [1, 5, 1])
    assert alpha_line(g) == 5
    assert alpha_line(WeightedTrigraph.make(Trigraph.from_pairs(1), [9])) == 9


def test_alpha_line_is_matching_number_of_root():
    rng = random.Random(21)
    for _ in range(60):
        root = random_line_root(rng, rng.randint(2, 9))
        n = len(root)
        g = Trigraph.from_pairs(n, sorted(line_graph_of(root)))
        wt = WeightedTrigraph.unweighted(g)
        assert alpha_line(wt) == alpha_by_enumeration(wt)


def test_expanded_line_trigraphs_stay_line_graphs():
    stream = gen_instances(GeneratorConfig(seed=3, n_range=(4, 12)), ("line",))
    for _ in range(60):
        _, wt = next(stream)
        res = replace_all_gems(wt).result
        root = line_graph_root(res.g)
        assert root.line_graph_edges() == set(res.g.strong_pairs)


def test_alpha_basic_dispatch_on_generated_pieces():
    stream = gen_instances(GeneratorConfig(seed=4, n_range=(3, 12)), ("series-parallel", "complete-bipartite", "line"))
    for _ in range(90):
        cls, wt = next(stream)
        assert alpha_basic(wt) == alpha_by_enumeration(wt), cls
        f = full_realization(wt.g)
        assert classify_basic(f) is classify_basic(wt.g) or wt.g.semi_pairs
