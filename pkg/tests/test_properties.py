"""Property-based checks driven by hypothesis."""

import itertools
import random

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from trigraph_mwss.basic import replace_all_gems
from trigraph_mwss.matching import EdgeWeightedGraph, brute_max_weight_matching, max_weight_matching
from trigraph_mwss.solver import alpha
from trigraph_mwss.testkit import GeneratorConfig, gen_instances
from trigraph_mwss.textio import dumps, loads
from trigraph_mwss.trigraph import Trigraph
from trigraph_mwss.weighting import WeightedTrigraph, WeightFunction, alpha_by_enumeration, reduce, set_weight

FAST = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)


@st.composite
def weighted_trigraphs(draw, max_n=8, weight_max=20):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    kinds = draw(st.lists(st.sampled_from((-1, 0, 1)), min_size=len(pairs), max_size=len(pairs)))
    strong = [p for p, k in zip(pairs, kinds) if k == 1]
    semi = [p for p, k in zip(pairs, kinds) if k == 0]
    g = Trigraph.from_pairs(n, strong, semi)
    vertex = tuple(draw(st.lists(st.integers(0, weight_max), min_size=n, max_size=n)))
    directed, pair = {}, {}
    for u, v in semi:
        p = draw(st.integers(0, weight_max))
        a = draw(st.integers(0, p))
        b = draw(st.integers(0, p))
        if p:
            pair[(u, v)] = p
        if a:
            directed[(u, v)] = a
        if b:
            directed[(v, u)] = b
    return WeightedTrigraph(g, WeightFunction(vertex, dict(sorted(directed.items())), pair))


@FAST
@given(weighted_trigraphs())
def test_text_round_trip(wt):
    assert dumps(loads(dumps(wt))) == dumps(wt)


@FAST
@given(weighted_trigraphs(max_n=7), st.data())
def test_reduction_bound(wt, data):
    r = data.draw(st.sets(st.integers(0, max(wt.n - 1, 0)), max_size=wt.n)) if wt.n else set()
    s = data.draw(st.sets(st.sampled_from(sorted(r)))) if r else set()
    red = reduce(wt, r)
    local = [red.index_map[v] for v in s]
    assert set_weight(wt, s) <= set_weight(red.reduced, local) + red.exterior


@FAST
@given(weighted_trigraphs(max_n=7))
def test_gem_expansion_keeps_alpha(wt):
    assume(len(wt.g.semi_pairs) <= 4)
    assert alpha_by_enumeration(replace_all_gems(wt).result) == alpha_by_enumeration(wt)


@FAST
@given(
    st.integers(1, 8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 100)), max_size=16),
        )
    )
)
def test_matching_optimal(args):
    n, raw = args
    g = EdgeWeightedGraph.from_edges(n, ((u, v, w) for u, v, w in raw if u != v))
    assert max_weight_matching(g)[1] == brute_max_weight_matching(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solver_matches_oracle_on_generated_instances(seed):
    _, wt = next(gen_instances(GeneratorConfig(seed=seed, n_range=(3, 12))))
    assert alpha(wt, trace=False).alpha == alpha_by_enumeration(wt)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solver_is_permutation_invariant(seed):
    rng = random.Random(seed)
    _, wt = next(gen_instances(GeneratorConfig(seed=seed, n_range=(3, 12))))
    perm = list(range(wt.n))
    rng.shuffle(perm)
    g = Trigraph.from_pairs(
        wt.n,
        [(perm[u], perm[v]) for u, v in wt.g.strong_pairs],
        [(perm[u], perm[v]) for u, v in wt.g.semi_pairs],
    )
    vertex = [0] * wt.n
    for u, x in enumerate(wt.w.vertex):
        vertex[perm[u]] = x
    directed = {(perm[u], perm[v]): x for (u, v), x in wt.w.directed.items()}
    pair = {tuple(sorted((perm[u], perm[v]))): x for (u, v), x in wt.w.pair.items()}
    moved = WeightedTrigraph.make(g, vertex, directed, pair)
    assert alpha(moved, trace=False).alpha == alpha(wt, trace=False).alpha
