"""Seeded generators of weighted {ISK4, wheel}-free trigraphs.

Basic pieces
    * series-parallel: grown from an edge by subdivision, parallel 2-paths and
      pendant vertices; any set of edges may then be marked semi (every
      realization is again series-parallel);
    * complete bipartite graphs;
    * line trigraphs ``L(H)`` where ``H`` is a subdivided subcubic multigraph
      (no edge joins two degree-3 vertices, so no cycle of ``H`` has a chord
      and ``L(H)`` has no wheel); only edges of ``L(H)`` lying in no triangle
      may be marked semi.

Glued instances
    * clique gluing: identify a strong clique of size 1-3 of two pieces;
    * stable gluing: identify a semi pair of the current trigraph with a semi
      pair of a new piece and make the pair strongly anti-adjacent.

Gluing on one vertex and stable gluing always preserve {ISK4, wheel}-freeness
(every ISK4 and every wheel is 2-connected, and a structure crossing a
stable 2-cutset meets one side in a path that the semi pair can stand in
for), so large instances are assembled from small validated pieces with
only those two operations.  Everything with at most
``GeneratorConfig.validate_up_to`` vertices is validated exhaustively before
it is emitted.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), which
produces the same stream on every platform and Python version.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass, field

from ..trigraph import Trigraph
from ..weighting import WeightedTrigraph, WeightFunction
from .validate import MAX_SEMI_PAIRS, is_isk4_wheel_free

CLASSES = ("series-parallel", "complete-bipartite", "line", "glued-clique", "glued-stable")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    n_range: tuple[int, int] = (4, 14)
    weight_max: int = 20
    class_mix: tuple[tuple[str, float], ...] = tuple((c, 1.0) for c in CLASSES)
    semi_prob: float = 0.3
    max_semi: int = 6  # keeps exhaustive validation cheap
    validate_up_to: int = 14

    def __post_init__(self) -> None:
        lo, hi = self.n_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad n_range {self.n_range}")
        for name, p in self.class_mix:
            if name not in CLASSES or p < 0:
                raise ValueError(f"bad class_mix entry {name!r}: {p}")
        if self.weight_max < 0:
            raise ValueError("weight_max must be non-negative")


@dataclass
class Skeleton:
    """Mutable trigraph under construction: pairs are stored as ``(u, v)``, u < v."""

    n: int = 0
    strong: set[tuple[int, int]] = field(default_factory=set)
    semi: set[tuple[int, int]] = field(default_factory=set)

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        self.strong.add((min(u, v), max(u, v)))

    def neighbours(self) -> list[set[int]]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in itertools.chain(self.strong, self.semi):
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def strong_cliques(self, size: int) -> list[tuple[int, ...]]:
        if size == 1:
            return [(v,) for v in range(self.n)]
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.strong:
            nb[u].add(v)
            nb[v].add(u)
        out = []
        for u, v in sorted(self.strong):
            if size == 2:
                out.append((u, v))
            else:
                out.extend((u, v, x) for x in sorted(nb[u] & nb[v]) if x > v)
        return out

    def to_trigraph(self) -> Trigraph:
        return Trigraph.from_pairs(self.n, sorted(self.strong), sorted(self.semi))

    def permuted(self, rng: random.Random) -> Skeleton:
        perm = list(range(self.n))
        rng.shuffle(perm)

        def key(p):
            a, b = perm[p[0]], perm[p[1]]
            return (min(a, b), max(a, b))

        return Skeleton(self.n, {key(p) for p in self.strong}, {key(p) for p in self.semi})


# -- basic pieces ----------------------------------------------------------


def random_series_parallel(rng: random.Random, n: int) -> Skeleton:
    sk = Skeleton()
    if n <= 0:
        return sk
    sk.add_vertex()
    if n == 1:
        return sk
    sk.add_vertex()
    sk.add_edge(0, 1)
    while sk.n < n:
        edges = sorted(sk.strong)
        op = rng.random()
        if op < 0.35:
            u, v = rng.choice(edges)
            sk.strong.discard((u, v))
            x = sk.add_vertex()
            sk.add_edge(u, x)
            sk.add_edge(x, v)
        elif op < 0.8:
            u, v = rng.choice(edges)
            x = sk.add_vertex()
            sk.add_edge(u, x)
            sk.add_edge(x, v)
        else:
            u = rng.randrange(sk.n)
            x = sk.add_vertex()
            sk.add_edge(u, x)
    return sk


def random_complete_bipartite(rng: random.Random, n: int) -> Skeleton:
    sk = Skeleton(n)
    if n < 2:
        return sk
    a = rng.randint(1, n - 1)
    for u in range(a):
        for v in range(a, n):
            sk.add_edge(u, v)
    return sk


def random_line_root(rng: random.Random, m: int) -> list[tuple[int, int]]:
    """Edge list of a subcubic graph with ``m`` edges and no chorded cycle.

    A small cubic multigraph (or nothing) has every edge subdivided at least
    once; pendant edges at vertices of degree < 3 make up the count.
    """
    bases = [
        (1, []),
        (2, [(0, 1)] * 3),  # theta
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),  # K4
        (6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),  # prism
        (6, [(a, b) for a in range(3) for b in range(3, 6)]),  # K33
    ]
    k, base = rng.choice([b for b in bases if 2 * len(b[1]) <= m])
    edges: list[tuple[int, int]] = []
    deg = [0] * k
    spare = m - 2 * len(base)
    for a, b in base:
        extra = rng.randint(0, min(spare, 2))
        spare -= extra
        prev = a
        for _ in range(1 + extra):
            deg.append(0)
            edges.append((prev, len(deg) - 1))
            prev = len(deg) - 1
        edges.append((prev, b))
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    while len(edges) < m:
        v = rng.choice([u for u in range(len(deg)) if deg[u] < 3])
        deg[v] += 1
        deg.append(1)
        edges.append((v, len(deg) - 1))
    return edges


def line_skeleton(root_edges: list[tuple[int, int]]) -> Skeleton:
    sk = Skeleton(len(root_edges))
    by_end: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(root_edges):
        for x in {a, b}:
            by_end.setdefault(x, []).append(i)
    for ids in by_end.values():
        for i, j in itertools.combinations(ids, 2):
            sk.add_edge(i, j)
    return sk


def triangle_free_edges(sk: Skeleton) -> list[tuple[int, int]]:
    nb = sk.neighbours()
    return [(u, v) for u, v in sorted(sk.strong) if not (nb[u] & nb[v])]


def mark_semi(
    rng: random.Random, sk: Skeleton, eligible: list[tuple[int, int]], prob: float, cap: int
) -> None:
    chosen = [e for e in eligible if rng.random() < prob]
    rng.shuffle(chosen)
    for e in chosen[:cap]:
        sk.strong.discard(e)
        sk.semi.add(e)


def random_weights(rng: random.Random, g: Trigraph, weight_max: int) -> WeightedTrigraph:
    vertex = tuple(rng.randint(0, weight_max) for _ in range(g.n))
    directed, pair = {}, {}
    for u, v in g.semi_pairs:
        p = rng.randint(0, weight_max)
        a, b = rng.randint(0, p), rng.randint(0, p)
        if p:
            pair[(u, v)] = p
        if a:
            directed[(u, v)] = a
        if b:
            directed[(v, u)] = b
    return WeightedTrigraph(g, WeightFunction(vertex, dict(sorted(directed.items())), pair))


def basic_piece(rng: random.Random, cls: str, n: int, semi_prob: float, cap: int) -> Skeleton:
    if cls == "series-parallel":
        sk = random_series_parallel(rng, n)
        mark_semi(rng, sk, sorted(sk.strong), semi_prob, cap)
    elif cls == "complete-bipartite":
        sk = random_complete_bipartite(rng, n)
    elif cls == "line":
        sk = line_skeleton(random_line_root(rng, n))
        mark_semi(rng, sk, triangle_free_edges(sk), semi_prob, cap)
    else:
        raise ValueError(f"not a basic class: {cls}")
    return sk


# -- gluing ----------------------------------------------------------------


def glue(
    s1: Skeleton, s2: Skeleton, ident: dict[int, int], make_anti: tuple[int, int] | None = None
) -> Skeleton:
    """Union of ``s1`` and ``s2`` with ``s2``'s vertex ``k`` identified with
    ``s1``'s vertex ``ident[k]``; ``make_anti`` (in ``s1`` indices) ends up
    strongly anti-adjacent."""
    out = Skeleton(s1.n, set(s1.strong), set(s1.semi))
    where = {}
    for v in range(s2.n):
        where[v] = ident[v] if v in ident else out.add_vertex()

    def key(p):
        a, b = where[p[0]], where[p[1]]
        return (min(a, b), max(a, b))

    for p in s2.strong:
        out.strong.add(key(p))
    for p in s2.semi:
        out.semi.add(key(p))
    if make_anti is not None:
        e = (min(make_anti), max(make_anti))
        out.semi.discard(e)
        out.strong.discard(e)
    if out.strong & out.semi:
        raise AssertionError("gluing produced conflicting pair types")
    return out


def glue_clique(rng: random.Random, s1: Skeleton, s2: Skeleton, size: int) -> Skeleton | None:
    k1, k2 = s1.strong_cliques(size), s2.strong_cliques(size)
    if not k1 or not k2:
        return None
    c1, c2 = list(rng.choice(k1)), list(rng.choice(k2))
    rng.shuffle(c2)
    return glue(s1, s2, dict(zip(c2, c1)))


def glue_stable(rng: random.Random, s1: Skeleton, s2: Skeleton) -> Skeleton | None:
    if not s1.semi or not s2.semi:
        return None
    a = rng.choice(sorted(s1.semi))
    b = list(rng.choice(sorted(s2.semi)))
    rng.shuffle(b)
    return glue(s1, s2, {b[0]: a[0], b[1]: a[1]}, make_anti=a)


# -- streams ---------------------------------------------------------------


def _pick_class(rng: random.Random, config: GeneratorConfig, allowed=CLASSES) -> str:
    names = [c for c, p in config.class_mix if c in allowed and p > 0]
    weights = [p for c, p in config.class_mix if c in allowed and p > 0]
    if not names:
        raise ValueError("class_mix has no positive entry for the requested classes")
    return rng.choices(names, weights)[0]


def _finish(
    rng: random.Random, sk: Skeleton, config: GeneratorConfig
) -> WeightedTrigraph | None:
    sk = sk.permuted(rng)
    g = sk.to_trigraph()
    if g.n <= config.validate_up_to and len(g.semi_pairs) <= MAX_SEMI_PAIRS:
        if not is_isk4_wheel_free(g):
            return None
    elif g.n <= config.validate_up_to:
        return None
    return random_weights(rng, g, config.weight_max)


def _glued_skeleton(rng: random.Random, config: GeneratorConfig, cls: str, n: int) -> Skeleton | None:
    basics = ("series-parallel", "line") if cls == "glued-stable" else (
        "series-parallel", "complete-bipartite", "line"
    )
    mix = dict(config.class_mix)
    names = [c for c in basics if mix.get(c, 1.0) > 0] or list(basics)
    n1 = rng.randint(min(3, n), max(3, n - 2))
    s1 = basic_piece(rng, rng.choice(names), n1, max(config.semi_prob, 0.4), config.max_semi)
    left = n - s1.n
    if cls == "glued-clique":
        size = rng.choice((1, 1, 2, 3))
        n2 = max(left + size, size + 1)
        s2 = basic_piece(rng, rng.choice(names), n2, config.semi_prob, config.max_semi)
        return glue_clique(rng, s1, s2, size)
    n2 = max(left + 2, 3)
    s2 = basic_piece(rng, rng.choice(names), n2, max(config.semi_prob, 0.4), config.max_semi)
    out = glue_stable(rng, s1, s2)
    if out is not None and len(out.semi) > config.max_semi:
        return None
    return out


def gen_instances(config: GeneratorConfig, allowed=CLASSES) -> Iterator[tuple[str, WeightedTrigraph]]:
    """Endless ``(class name, instance)`` stream for the configured mix."""
    rng = random.Random(config.seed)
    lo, hi = config.n_range
    while True:
        cls = _pick_class(rng, config, allowed)
        n = rng.randint(lo, hi)
        if cls in ("glued-clique", "glued-stable"):
            sk = _glued_skeleton(rng, config, cls, max(n, 4))
        else:
            sk = basic_piece(rng, cls, n, config.semi_prob, config.max_semi)
        if sk is None or not lo <= sk.n <= max(hi, lo):
            continue
        wt = _finish(rng, sk, config)
        if wt is not None:
            yield cls, wt


def gen_basic(config: GeneratorConfig) -> Iterator[WeightedTrigraph]:
    for _, wt in gen_instances(config, CLASSES[:3]):
        yield wt


def gen_glued(config: GeneratorConfig) -> Iterator[WeightedTrigraph]:
    for _, wt in gen_instances(config, CLASSES[3:]):
        yield wt


def gen_large_glued(
    seed: int, n: int, weight_max: int = 20, piece_range: tuple[int, int] = (5, 12),
    superpiece_max: int = 40,
) -> WeightedTrigraph:
    """An instance with exactly ``n`` vertices built only from safe gluings.

    Small validated basic pieces are chained by stable gluing into
    "super-pieces" of at most ``superpiece_max`` vertices, which are then
    hung on a random tree by single-vertex gluing.
    """
    rng = random.Random(seed)
    config = GeneratorConfig(seed=seed, weight_max=weight_max)

    def validated_piece(size: int, need_semi: bool) -> Skeleton:
        while True:
            cls = rng.choice(("series-parallel", "line", "complete-bipartite"))
            if need_semi and cls == "complete-bipartite":
                continue
            sk = basic_piece(rng, cls, size, 0.35, 5)
            if need_semi and not sk.semi:
                continue
            if is_isk4_wheel_free(sk.to_trigraph()):
                return sk

    def superpiece(limit: int) -> Skeleton:
        lo, hi = piece_range
        sp = validated_piece(min(rng.randint(lo, hi), limit), need_semi=False)
        while sp.n < limit - 2 and sp.semi:
            want = min(rng.randint(lo, hi), limit - sp.n + 2)
            sp = glue_stable(rng, sp, validated_piece(want, need_semi=True))
        return sp

    total = superpiece(min(n, superpiece_max))
    while total.n < n:
        sp = superpiece(min(n - total.n + 1, superpiece_max))
        total = glue(total, sp, {rng.randrange(sp.n): rng.randrange(total.n)})
    total = total.permuted(rng)
    return random_weights(rng, total.to_trigraph(), config.weight_max)
