"""Tree decompositions of series-parallel graphs and the independent-set DP."""

from __future__ import annotations

import heapq
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations

from ..errors import InvalidArgument, NotSeriesParallel
from ..trigraph import Trigraph
from .gem import GemExpansion


@dataclass
class TreeDecomposition:
    bags: list[frozenset[int]]
    tree: list[list[int]] = field(default_factory=list)  # adjacency among bag indices

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def add_bag(self, bag: frozenset[int], attach_to: int | None) -> int:
        self.bags.append(bag)
        self.tree.append([])
        i = len(self.bags) - 1
        if attach_to is not None:
            self.tree[i].append(attach_to)
            self.tree[attach_to].append(i)
        return i

    def copy(self) -> TreeDecomposition:
        return TreeDecomposition(list(self.bags), [list(t) for t in self.tree])


def tree_decomposition_problems(
    n: int, edges: Sequence[tuple[int, int]], td: TreeDecomposition
) -> list[str]:
    """Violations of the tree-decomposition axioms (empty when valid)."""
    out = []
    m = len(td.bags)
    if len(td.tree) != m:
        return ["tree adjacency does not match the bag list"]
    if n and not m:
        return ["no bags"]
    # the bag graph must be a tree
    n_links = sum(len(t) for t in td.tree)
    if n_links != 2 * (m - 1):
        out.append(f"bag graph has {n_links // 2} links for {m} bags")
    seen = {0} if m else set()
    stack = [0] if m else []
    while stack:
        i = stack.pop()
        for j in td.tree[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != m:
        out.append("bag graph is disconnected")
    holders: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if v not in holders:
                out.append(f"bag {i} holds unknown vertex {v}")
                continue
            holders[v].append(i)
    for v, hs in holders.items():
        if not hs:
            out.append(f"vertex {v} in no bag")
            continue
        hs_set = set(hs)
        reach = {hs[0]}
        stack = [hs[0]]
        while stack:
            i = stack.pop()
            for j in td.tree[i]:
                if j in hs_set and j not in reach:
                    reach.add(j)
                    stack.append(j)
        if reach != hs_set:
            out.append(f"bags holding vertex {v} are not connected")
    covered = set()
    for bag in td.bags:
        covered.update(combinations(sorted(bag), 2))
    for u, v in edges:
        if (min(u, v), max(u, v)) not in covered:
            out.append(f"edge {u}{v} not covered")
    return out


def tree_decomposition_width2(g: Trigraph) -> TreeDecomposition:
    """Width <= 2 decomposition of the full realization of ``g``.

    Repeatedly eliminates a vertex of minimum degree, provided it is <= 2, joining its two neighbours
    when it has two.  This succeeds exactly on graphs of treewidth <= 2,
    i.e. series-parallel graphs; otherwise :class:`NotSeriesParallel`.
    """
    n = g.n
    adj = [set(nb) for nb in g.neighbors]
    alive = [True] * n
    # min-degree first, so trees and forests come out with width <= 1
    heap = [(len(adj[v]), v) for v in range(n) if len(adj[v]) <= 2]
    heapq.heapify(heap)
    order: list[int] = []
    bag_nbrs: list[tuple[int, ...]] = [()] * n
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != len(adj[v]):
            continue  # stale entry
        alive[v] = False
        order.append(v)
        nb = tuple(sorted(adj[v]))
        bag_nbrs[v] = nb
        for u in nb:
            adj[u].discard(v)
        if len(nb) == 2:
            a, b = nb
            adj[a].add(b)
            adj[b].add(a)
        for u in nb:
            if len(adj[u]) <= 2:
                heapq.heappush(heap, (len(adj[u]), u))
    if len(order) != n:
        raise NotSeriesParallel(
            f"elimination stalled with {n - len(order)} vertices of degree >= 3"
        )
    pos = {v: i for i, v in enumerate(order)}
    td = TreeDecomposition([frozenset((v,) + bag_nbrs[v]) for v in order], [[] for _ in order])
    roots = []
    for i, v in enumerate(order):
        if bag_nbrs[v]:
            parent = min(pos[u] for u in bag_nbrs[v])
            td.tree[i].append(parent)
            td.tree[parent].append(i)
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        td.tree[a].append(b)
        td.tree[b].append(a)
    return td


def augment_decomposition_for_gems(
    td: TreeDecomposition, exp: GemExpansion
) -> TreeDecomposition:
    """Extend a decomposition of the source's full realization to the gem
    expansion.

    Each gem on ``uv`` hangs a two-bag chain ``{u, v, x_uv, x_u,v}`` -
    ``{u, x_v,u, x_uv, x_u,v}`` off a bag holding both ``u`` and ``v``.
    """
    out = td.copy()
    if not exp.gems:
        return out
    where: dict[frozenset[int], int] = {}
    for i, bag in enumerate(td.bags):
        for a, b in combinations(sorted(bag), 2):
            where.setdefault(frozenset((a, b)), i)
    for gm in exp.gems:
        u, v = gm.pair
        host = where.get(frozenset((u, v)))
        if host is None:
            raise InvalidArgument(f"no bag holds the semi pair {u}{v}")
        first = out.add_bag(frozenset((u, v, gm.x_pair, gm.x_uv)), host)
        out.add_bag(frozenset((u, gm.x_vu, gm.x_pair, gm.x_uv)), first)
    return out


def mwss_on_tree_decomposition(
    g: Trigraph, weights: Sequence[int], td: TreeDecomposition, check: bool = True
) -> int:
    """Maximum total vertex weight of an independent set of the graph ``g``.

    Subset-per-bag dynamic programme, children joined through their shared
    vertices: ``T[b][S] = w(S) + sum_c max{T[c][S'] - w(S' & shared) :
    S' & shared == S & shared}``.  Linear in bags * 2**(width + 1).
    """
    n = g.n
    if n == 0:
        return 0
    if check:
        problems = tree_decomposition_problems(n, g.strong_pairs + g.semi_pairs, td)
        if problems:
            raise InvalidArgument("invalid tree decomposition: " + problems[0])
    nbrs = g.neighbors
    m = len(td.bags)
    parent = [-1] * m
    order = [0]
    parent[0] = 0
    for i in order:
        for j in td.tree[i]:
            if parent[j] == -1:
                parent[j] = i
                order.append(j)
    parent[0] = -1
    tables: list[dict[frozenset[int], int] | None] = [None] * m
    children: list[list[int]] = [[] for _ in range(m)]
    for i in order[1:]:
        children[parent[i]].append(i)
    for i in reversed(order):
        bag = sorted(td.bags[i])
        joins = []
        for c in children[i]:
            shared = td.bags[i] & td.bags[c]
            best: dict[frozenset[int], int] = {}
            for s, val in tables[c].items():
                key = s & shared
                val -= sum(weights[v] for v in key)
                if best.get(key, -1) < val:
                    best[key] = val
            joins.append((shared, best))
            tables[c] = None
        table = {}
        for s in _independent_subsets(bag, nbrs):
            val = sum(weights[v] for v in s)
            for shared, best in joins:
                val += best[s & shared]
            table[s] = val
        tables[i] = table
    return max(tables[0].values())


def _independent_subsets(bag: list[int], nbrs) -> list[frozenset[int]]:
    out = [frozenset()]
    for v in bag:
        nv = nbrs[v]
        out += [s | {v} for s in out if not any(u in s for u in nv)]
    return out
