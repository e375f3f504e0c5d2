"""Trigraphs: vertex sets with a three-valued adjacency function.

A pair of distinct vertices is strongly adjacent (+1), semi-adjacent (0) or
strongly anti-adjacent (-1).  Vertices are the integers ``0..n-1``; every
trigraph also carries a tuple of *labels* so that induced subtrigraphs and
blocks can be traced back to the vertices of the instance they came from.

Storage is a dense symmetric ``int8`` matrix.  The diagonal holds -1 and is
never exposed through :func:`adjacency`.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidArgument

STRONG_ANTI = -1
SEMI = 0
STRONG_ADJ = 1


class Adjacency(enum.IntEnum):
    STRONG_ANTI = -1
    SEMI = 0
    STRONG_ADJ = 1


@dataclass(frozen=True, eq=False)
class Trigraph:
    theta: np.ndarray
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        theta = self.theta
        if theta.ndim != 2 or theta.shape[0] != theta.shape[1]:
            raise InvalidArgument("adjacency matrix must be square")
        if len(self.labels) != theta.shape[0]:
            raise InvalidArgument("need exactly one label per vertex")
        if theta.dtype != np.int8:
            theta = theta.astype(np.int8)
            object.__setattr__(self, "theta", theta)
        if theta.flags.writeable:
            theta = theta.copy()
            theta.flags.writeable = False
            object.__setattr__(self, "theta", theta)

    # -- construction -------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        n: int,
        strong: Iterable[tuple[int, int]] = (),
        semi: Iterable[tuple[int, int]] = (),
        labels: Iterable[int] | None = None,
    ) -> Trigraph:
        theta = np.full((n, n), STRONG_ANTI, dtype=np.int8)
        seen: set[tuple[int, int]] = set()
        for value, pairs in ((STRONG_ADJ, strong), (SEMI, semi)):
            for u, v in pairs:
                key = _pair_key(n, u, v)
                if key in seen:
                    raise InvalidArgument(f"pair {u} {v} given twice")
                seen.add(key)
                theta[u, v] = theta[v, u] = value
        return cls(theta, tuple(range(n)) if labels is None else tuple(labels))

    @classmethod
    def null(cls) -> Trigraph:
        return cls(np.zeros((0, 0), dtype=np.int8), ())

    def with_labels(self, labels: Iterable[int]) -> Trigraph:
        return Trigraph(self.theta, tuple(labels))

    # -- basic queries ------------------------------------------------

    @property
    def n(self) -> int:
        return self.theta.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.theta, other.theta)

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={self.n}, strong={len(self.strong_pairs)}, "
            f"semi={len(self.semi_pairs)})"
        )

    def theta_of(self, u: int, v: int) -> int:
        """Raw adjacency code; no range checks (hot path)."""
        return int(self.theta[u, v])

    @cached_property
    def _pairs(self) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
        iu, ju = np.triu_indices(self.n, k=1)
        vals = self.theta[iu, ju]
        strong = tuple(zip(iu[vals == STRONG_ADJ].tolist(), ju[vals == STRONG_ADJ].tolist()))
        semi = tuple(zip(iu[vals == SEMI].tolist(), ju[vals == SEMI].tolist()))
        return strong, semi

    @property
    def strong_pairs(self) -> tuple[tuple[int, int], ...]:
        """Strongly adjacent pairs ``(u, v)`` with ``u < v``, sorted."""
        return self._pairs[0]

    @property
    def semi_pairs(self) -> tuple[tuple[int, int], ...]:
        """Semi-adjacent pairs ``(u, v)`` with ``u < v``, sorted."""
        return self._pairs[1]

    def is_graph(self) -> bool:
        return not self.semi_pairs

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour lists of the full realization (strong or semi)."""
        return _rows(self.theta >= SEMI)

    @cached_property
    def strong_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _rows(self.theta == STRONG_ADJ)

    @cached_property
    def strong_neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.strong_neighbors)

    def check_vertex(self, u: int) -> None:
        if not (isinstance(u, (int, np.integer)) and 0 <= u < self.n):
            raise InvalidArgument(f"vertex {u!r} not in 0..{self.n - 1}")

    def check_subset(self, x: Iterable[int]) -> frozenset[int]:
        xs = frozenset(int(v) for v in x)
        for v in xs:
            self.check_vertex(v)
        return xs


def _rows(mask: np.ndarray) -> tuple[tuple[int, ...], ...]:
    n = mask.shape[0]
    if n == 0:
        return ()
    ii, jj = np.nonzero(mask)
    cuts = np.searchsorted(ii, np.arange(n + 1))
    jl = jj.tolist()
    return tuple(tuple(jl[cuts[i]:cuts[i + 1]]) for i in range(n))


def _pair_key(n: int, u: int, v: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidArgument(f"pair {u} {v} out of range 0..{n - 1}")
    if u == v:
        raise InvalidArgument(f"self-pair {u} {v}")
    return (u, v) if u < v else (v, u)


# -- operations ---------------------------------------------------------


def adjacency(g: Trigraph, u: int, v: int) -> Adjacency:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidArgument("adjacency is only defined for distinct vertices")
    return Adjacency(int(g.theta[u, v]))


def induced(g: Trigraph, x: Iterable[int]) -> tuple[Trigraph, dict[int, int]]:
    """Subtrigraph induced by ``x`` and the old->new vertex map.

    New indices follow increasing old index, so the map is order preserving.
    Labels are carried over.
    """
    keep = sorted(g.check_subset(x))
    idx = np.asarray(keep, dtype=np.intp)
    sub = g.theta[np.ix_(idx, idx)]
    labels = tuple(g.labels[i] for i in keep)
    return Trigraph(sub, labels), {old: new for new, old in enumerate(keep)}


def delete(g: Trigraph, x: Iterable[int]) -> tuple[Trigraph, dict[int, int]]:
    gone = g.check_subset(x)
    return induced(g, (v for v in range(g.n) if v not in gone))


def full_realization(g: Trigraph) -> Trigraph:
    theta = np.where(g.theta == SEMI, STRONG_ADJ, g.theta).astype(np.int8)
    return Trigraph(theta, g.labels)


def null_realization(g: Trigraph) -> Trigraph:
    theta = np.where(g.theta == SEMI, STRONG_ANTI, g.theta).astype(np.int8)
    return Trigraph(theta, g.labels)


def realizations(g: Trigraph) -> Iterator[Trigraph]:
    """Yield all ``2**m`` realizations, ``m`` = number of semi pairs.

    Exponential in ``m``; meant for small test instances.
    """
    semi = g.semi_pairs
    for choice in itertools.product((STRONG_ANTI, STRONG_ADJ), repeat=len(semi)):
        theta = np.array(g.theta)
        for (u, v), val in zip(semi, choice):
            theta[u, v] = theta[v, u] = val
        yield Trigraph(theta, g.labels)


# -- connectivity (always on the full realization) ----------------------


def components(g: Trigraph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g`` minus ``removed``, ordered by smallest member.

    The null trigraph has no components.
    """
    nbrs = g.neighbors
    seen = bytearray(g.n)
    for v in removed:
        seen[v] = 1
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = 1
                    comp.append(v)
                    stack.append(v)
        out.append(frozenset(comp))
    return out


def is_connected(g: Trigraph) -> bool:
    """True iff the full realization is connected; False for the null trigraph."""
    return len(components(g)) == 1


def is_cutset(g: Trigraph, c: Iterable[int]) -> bool:
    """``g`` minus ``c`` has at least two components."""
    return _component_count_at_least(g, frozenset(c), 2)


def _component_count_at_least(g: Trigraph, removed: frozenset[int], k: int) -> bool:
    nbrs = g.neighbors
    seen = bytearray(g.n)
    for v in removed:
        seen[v] = 1
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        if count >= k:
            return True
        seen[s] = 1
        stack = [s]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = 1
                    stack.append(v)
    return False


def articulation_points(g: Trigraph, removed: Iterable[int] = ()) -> set[int]:
    """Cut vertices of the full realization of ``g`` minus ``removed``.

    A vertex counts when deleting it increases the number of components of its
    own component (iterative Tarjan low-link).
    """
    n = g.n
    nbrs = g.neighbors
    disc = [-1] * n
    for v in removed:
        disc[v] = -2
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                dv = disc[v]
                if dv == -2:
                    continue
                if dv == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(nbrs[v])))
                    advanced = True
                    break
                if v != parent and dv < low[u]:
                    low[u] = dv
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[u] < low[parent]:
                    low[parent] = low[u]
                if parent == root:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    out.add(parent)
        if root_children >= 2:
            out.add(root)
    return out


def shortest_path(g: Trigraph, a: int, b: int, within: Iterable[int] | None = None) -> list[int] | None:
    """BFS path from ``a`` to ``b`` in the full realization, optionally
    restricted to the vertex set ``within``."""
    nbrs = g.neighbors
    allowed = None if within is None else frozenset(within)
    prev = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return path[::-1]
        for v in nbrs[u]:
            if v not in prev and (allowed is None or v in allowed):
                prev[v] = u
                queue.append(v)
    return None


def narrow_path(g: Trigraph, a: int, b: int) -> frozenset[int] | None:
    """Vertex set of a narrow path between ``a`` and ``b``, or None.

    A shortest path of the full realization is induced there, so the
    subtrigraph it spans has a path as full realization.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise InvalidArgument("narrow_path needs distinct endpoints")
    path = shortest_path(g, a, b)
    return None if path is None else frozenset(path)


def is_narrow_path_between(g: Trigraph, p: Iterable[int], a: int, b: int) -> bool:
    """Whether the full realization of ``g[p]`` is a path with ends ``a``, ``b``."""
    ps = frozenset(p)
    if a not in ps or b not in ps or a == b:
        return False
    deg = {v: sum(1 for u in g.neighbors[v] if u in ps) for v in ps}
    if deg[a] != 1 or deg[b] != 1:
        return False
    if any(d != 2 for v, d in deg.items() if v not in (a, b)):
        return False
    return shortest_path(g, a, b, within=ps) is not None and sum(deg.values()) == 2 * (len(ps) - 1)


# -- stable sets and cliques -------------------------------------------


def is_stable_set(g: Trigraph, s: Iterable[int]) -> bool:
    """Pairwise anti-adjacent (semi pairs allowed)."""
    idx = np.asarray(sorted(g.check_subset(s)), dtype=np.intp)
    return not bool((g.theta[np.ix_(idx, idx)] == STRONG_ADJ).any())


def is_strong_clique(g: Trigraph, s: Iterable[int]) -> bool:
    idx = np.asarray(sorted(g.check_subset(s)), dtype=np.intp)
    sub = g.theta[np.ix_(idx, idx)]
    off = ~np.eye(len(idx), dtype=bool)
    return bool((sub[off] == STRONG_ADJ).all())
