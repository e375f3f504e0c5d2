"""Weighted trigraphs and the weight calculus.

A weight function gives every vertex a non-negative integer weight and every
semi-adjacent pair ``uv`` three more: the directed weights ``w(u,v)``,
``w(v,u)`` and the pair weight ``w(uv)``, with ``max(w(u,v), w(v,u)) <= w(uv)``.
All other pair weights are zero.  The weight of a vertex set ``S`` is

    sum of w(u) over u in S
    + sum of w(u,v) over u in S, v outside S
    + sum of w(uv) over pairs with both ends outside S,

so it is not monotone in ``S``.  Integers are Python ints throughout; the
transfer formulas subtract alpha values and must never wrap.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np

from .decomposition import CutKind, CutPartition, Side, check_cut_partition, make_block
from .errors import InternalError, InvalidArgument
from .trigraph import SEMI, Trigraph, induced

Pair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """Sparse weights on D(G); missing entries read as 0.

    ``directed[(u, v)]`` is ``w(u,v)``; ``pair[(u, v)]`` with ``u < v`` is ``w(uv)``.
    Only non-zero entries are stored.
    """

    vertex: tuple[int, ...]
    directed: Mapping[Pair, int] = field(default_factory=dict)
    pair: Mapping[Pair, int] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        n: int,
        vertex: Iterable[int] | Mapping[int, int] | None = None,
        directed: Mapping[Pair, int] | None = None,
        pair: Mapping[Pair, int] | None = None,
    ) -> WeightFunction:
        if vertex is None:
            vw = [0] * n
        elif isinstance(vertex, Mapping):
            vw = [0] * n
            for u, x in vertex.items():
                vw[u] = x
        else:
            vw = list(vertex)
        if len(vw) != n:
            raise InvalidArgument(f"expected {n} vertex weights, got {len(vw)}")
        for x in vw:
            _check_nonneg(x)
        d: dict[Pair, int] = {}
        for (u, v), x in sorted((directed or {}).items()):
            _check_nonneg(x)
            if u == v:
                raise InvalidArgument("directed weight on a self-pair")
            if x:
                d[(u, v)] = x
        p: dict[Pair, int] = {}
        for (u, v), x in (pair or {}).items():
            _check_nonneg(x)
            if u == v:
                raise InvalidArgument("pair weight on a self-pair")
            key = (u, v) if u < v else (v, u)
            if key in p:
                raise InvalidArgument(f"pair weight for {key} given twice")
            if x:
                p[key] = x
        return cls(tuple(int(x) for x in vw), d, dict(sorted(p.items())))

    def w(self, u: int) -> int:
        return self.vertex[u]

    def dw(self, u: int, v: int) -> int:
        return self.directed.get((u, v), 0)

    def pw(self, u: int, v: int) -> int:
        return self.pair.get((u, v) if u < v else (v, u), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return (
            self.vertex == other.vertex
            and dict(self.directed) == dict(other.directed)
            and dict(self.pair) == dict(other.pair)
        )

    def restrict(self, vertices: Iterable[int]) -> WeightFunction:
        """Weights of the subtrigraph on ``vertices`` (in that order)."""
        verts = list(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        d = {
            (pos[u], pos[v]): x
            for (u, v), x in self.directed.items()
            if u in pos and v in pos
        }
        p = {}
        for (u, v), x in self.pair.items():
            if u in pos and v in pos:
                a, b = pos[u], pos[v]
                p[(a, b) if a < b else (b, a)] = x
        return WeightFunction(tuple(self.vertex[v] for v in verts), d, p)


def _check_nonneg(x: int) -> None:
    if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or x < 0:
        raise InvalidArgument(f"weights must be non-negative integers, got {x!r}")


@dataclass(frozen=True, eq=False)
class WeightedTrigraph:
    g: Trigraph
    w: WeightFunction

    @classmethod
    def make(
        cls,
        g: Trigraph,
        vertex: Iterable[int] | Mapping[int, int] | None = None,
        directed: Mapping[Pair, int] | None = None,
        pair: Mapping[Pair, int] | None = None,
    ) -> WeightedTrigraph:
        """Build and validate; raises InvalidArgument on an invalid weight function."""
        wt = cls(g, WeightFunction.build(g.n, vertex, directed, pair))
        problems = validate(wt)
        if problems:
            raise InvalidArgument(problems[0])
        return wt

    @classmethod
    def unweighted(cls, g: Trigraph, weight: int = 1) -> WeightedTrigraph:
        return cls(g, WeightFunction((weight,) * g.n, {}, {}))

    @property
    def n(self) -> int:
        return self.g.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedTrigraph):
            return NotImplemented
        return self.g == other.g and self.w == other.w

    def __repr__(self) -> str:
        return f"WeightedTrigraph({self.g!r}, total_vertex_weight={sum(self.w.vertex)})"


def validate(wt: WeightedTrigraph) -> list[str]:
    """Violations of the two weight-function rules; empty means valid."""
    g, w = wt.g, wt.w
    out = []
    if len(w.vertex) != g.n:
        out.append(f"{len(w.vertex)} vertex weights for {g.n} vertices")
        return out
    for u, x in enumerate(w.vertex):
        if x < 0:
            out.append(f"negative weight on vertex {u}")
    for (u, v), x in w.directed.items():
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            out.append(f"directed weight on invalid pair ({u},{v})")
            continue
        if x < 0:
            out.append(f"negative weight w({u},{v})")
        if g.theta[u, v] != SEMI and x:
            out.append(f"w({u},{v}) = {x} on a pair that is not semi-adjacent")
        if x > w.pw(u, v):
            out.append(f"w({u},{v}) = {x} exceeds w({u}{v}) = {w.pw(u, v)}")
    for (u, v), x in w.pair.items():
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            out.append(f"pair weight on invalid pair {u}{v}")
            continue
        if x < 0:
            out.append(f"negative weight w({u}{v})")
        if g.theta[u, v] != SEMI and x:
            out.append(f"w({u}{v}) = {x} on a pair that is not semi-adjacent")
    return out


def restrict(wt: WeightedTrigraph, x: Iterable[int]) -> tuple[WeightedTrigraph, dict[int, int]]:
    """``(G[X], w)`` together with the old->new index map."""
    sub, mapping = induced(wt.g, x)
    return WeightedTrigraph(sub, wt.w.restrict(sorted(mapping))), mapping


def set_weight(wt: WeightedTrigraph, s: Iterable[int]) -> int:
    """The weight of ``S`` with respect to ``wt``."""
    ss = wt.g.check_subset(s)
    w = wt.w
    total = sum(w.vertex[u] for u in ss)
    for (u, v), x in w.directed.items():
        if u in ss and v not in ss:
            total += x
    for (u, v), x in w.pair.items():
        if u not in ss and v not in ss:
            total += x
    return total


@dataclass(frozen=True)
class ReductionResult:
    reduced: WeightedTrigraph
    exterior: int
    index_map: dict[int, int]  # index in the source -> index in ``reduced``


def reduce(wt: WeightedTrigraph, r: Iterable[int]) -> ReductionResult:
    """Reduction to ``R`` and the exterior weight of ``R``.

    Vertex weights inside ``R`` are debited by ``w(uv) - w(u,v)`` for every
    outside ``v`` and floored at zero; the pair weights that touch the outside
    are collected into the exterior weight.  O(n^2) pair visits at worst.
    """
    g, w = wt.g, wt.w
    rs = g.check_subset(r)
    debit: dict[int, int] = {}
    exterior = 0
    for (u, v), x in w.pair.items():
        u_in, v_in = u in rs, v in rs
        if u_in and v_in:
            continue
        exterior += x
        if u_in:
            debit[u] = debit.get(u, 0) + x - w.dw(u, v)
        elif v_in:
            debit[v] = debit.get(v, 0) + x - w.dw(v, u)
    sub, mapping = induced(g, rs)
    order = sorted(mapping)
    vertex = tuple(max(w.vertex[u] - debit.get(u, 0), 0) for u in order)
    d = {(mapping[u], mapping[v]): x for (u, v), x in w.directed.items() if u in rs and v in rs}
    p = {(mapping[u], mapping[v]): x for (u, v), x in w.pair.items() if u in rs and v in rs}
    return ReductionResult(WeightedTrigraph(sub, WeightFunction(vertex, d, p)), exterior, mapping)


# -- exhaustive stability number ------------------------------------------

ENUMERATION_LIMIT = 22


def stable_sets(g: Trigraph) -> Iterable[frozenset[int]]:
    """All stable sets by backtracking over vertices (exponential)."""
    n = g.n
    strong = g.strong_neighbor_sets

    def grow(i: int, chosen: list[int], blocked: frozenset[int]):
        if i == n:
            yield frozenset(chosen)
            return
        yield from grow(i + 1, chosen, blocked)
        if i not in blocked:
            chosen.append(i)
            yield from grow(i + 1, chosen, blocked | strong[i])
            chosen.pop()

    yield from grow(0, [], frozenset())


def alpha_by_enumeration(wt: WeightedTrigraph, *, witness: bool = False):
    """Maximum weight over all stable sets, by exhaustive enumeration.

    Exponential in ``n``: the vectorised path scores all ``2**n`` subsets at
    once and is used whenever the total weight fits comfortably in int64.
    With ``witness=True`` returns ``(alpha, best_set)``.
    """
    g, w = wt.g, wt.w
    n = g.n
    if n > ENUMERATION_LIMIT:
        raise InvalidArgument(f"enumeration refused for n = {n} > {ENUMERATION_LIMIT}")
    bound = sum(w.vertex) + sum(w.directed.values()) + sum(w.pair.values())
    if bound < 2**53:
        return _alpha_vectorised(wt, witness)
    best, arg = -1, frozenset()
    for s in stable_sets(g):
        val = set_weight(wt, s)
        if val > best:
            best, arg = val, s
    return (best, arg) if witness else best


def _alpha_vectorised(wt: WeightedTrigraph, witness: bool, chunk_bits: int = 16):
    g, w = wt.g, wt.w
    n = g.n
    best, arg = -1, 0
    step = 1 << min(n, chunk_bits)
    for start in range(0, 1 << n, step):
        masks = np.arange(start, start + step, dtype=np.int64)
        bits = [(masks >> i) & 1 for i in range(n)]
        ok = np.ones(step, dtype=bool)
        for u, v in g.strong_pairs:
            ok &= (bits[u] & bits[v]) == 0
        score = np.zeros(step, dtype=np.int64)
        for u, x in enumerate(w.vertex):
            if x:
                score += x * bits[u]
        for (u, v), x in w.directed.items():
            score += x * (bits[u] & (1 - bits[v]))
        for (u, v), x in w.pair.items():
            score += x * ((1 - bits[u]) & (1 - bits[v]))
        score = np.where(ok, score, -1)
        k = int(np.argmax(score))
        if int(score[k]) > best:
            best, arg = int(score[k]), start + k
    if not witness:
        return best
    return best, frozenset(i for i in range(n) if (arg >> i) & 1)


# -- cutset weight transfer ------------------------------------------------

AlphaOracle = Callable[[WeightedTrigraph], int]


@dataclass(frozen=True)
class CutsetAlphaTable:
    """``alpha_{A | C'}`` for every ``C'`` inside the cutset (parent indices)."""

    entries: dict[frozenset[int], int]

    def __getitem__(self, key: Iterable[int]) -> int:
        return self.entries[frozenset(key)]

    def is_monotone(self) -> bool:
        return all(
            self.entries[s] <= self.entries[t]
            for s in self.entries
            for t in self.entries
            if s <= t
        )

    def as_labelled(self, labels: tuple[int, ...]) -> dict[str, int]:
        out = {}
        for key, val in sorted(self.entries.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            out[",".join(str(labels[v]) for v in sorted(key)) or "-"] = val
        return out


def cutset_alpha_table(
    wt: WeightedTrigraph, part: CutPartition, block_alpha: AlphaOracle
) -> CutsetAlphaTable:
    """Solve the reductions of the A-block to ``A | C'`` for all ``C'``."""
    block = make_block(wt.g, part, Side.A)
    wa = WeightedTrigraph(block.trig, wt.w.restrict(block.vertices))
    pos = {v: i for i, v in enumerate(block.vertices)}
    a_local = [pos[v] for v in part.a]
    cs = sorted(part.c)
    entries = {}
    for k in range(len(cs) + 1):
        for sub in itertools.combinations(cs, k):
            red = reduce(wa, a_local + [pos[c] for c in sub])
            entries[frozenset(sub)] = block_alpha(red.reduced) + red.exterior
    return CutsetAlphaTable(entries)


@dataclass(frozen=True)
class CliqueTransfer:
    wb: WeightedTrigraph
    k: int
    table: CutsetAlphaTable
    vertices: tuple[int, ...]  # B-block index -> parent index


@dataclass(frozen=True)
class StableTransfer:
    wb: WeightedTrigraph
    table: CutsetAlphaTable
    vertices: tuple[int, ...]


def clique_cut_transfer(
    wt: WeightedTrigraph, part: CutPartition, block_alpha: AlphaOracle
) -> CliqueTransfer:
    """Fold the A side into the cutset vertex weights of the B-block.

    ``alpha(G, w) == k + alpha(G_B, w_B)`` with ``k = alpha_A``.
    """
    if part.kind is not CutKind.CLIQUE:
        raise InvalidArgument("clique transfer needs a type-clique partition")
    check_cut_partition(wt.g, part)
    table = cutset_alpha_table(wt, part, block_alpha)
    base = table[()]
    block = make_block(wt.g, part, Side.B)
    wb = wt.w.restrict(block.vertices)
    vertex = list(wb.vertex)
    pos = {v: i for i, v in enumerate(block.vertices)}
    for c in part.c:
        gain = table[(c,)] - base
        if gain < 0:
            raise InternalError(f"alpha table not monotone at cutset vertex {c}")
        vertex[pos[c]] = gain
    out = WeightedTrigraph(block.trig, WeightFunction(tuple(vertex), wb.directed, wb.pair))
    return CliqueTransfer(out, base, table, block.vertices)


def stable_cut_transfer(
    wt: WeightedTrigraph, part: CutPartition, block_alpha: AlphaOracle
) -> StableTransfer:
    """Encode the A side into the semi pair ``c1c2`` of the B-block.

    ``c1`` is the smaller index.  ``alpha(G_B, w_B) == alpha(G, w)``.  The new
    weights are provably valid on correct input; a violation raises
    :class:`InternalError`.
    """
    if part.kind is not CutKind.STABLE:
        raise InvalidArgument("stable transfer needs a type-stable partition")
    check_cut_partition(wt.g, part)
    table = cutset_alpha_table(wt, part, block_alpha)
    c1, c2 = sorted(part.c)
    a0, a1, a2, a12 = table[()], table[(c1,)], table[(c2,)], table[(c1, c2)]
    w2 = wt.w.vertex[c2]
    block = make_block(wt.g, part, Side.B)
    pos = {v: i for i, v in enumerate(block.vertices)}
    i1, i2 = pos[c1], pos[c2]
    base = wt.w.restrict(block.vertices)
    vertex = list(base.vertex)
    vertex[i1] = a12 - w2
    vertex[i2] = w2
    directed = {k: x for k, x in base.directed.items() if set(k) != {i1, i2}}
    pair = {k: x for k, x in base.pair.items() if set(k) != {i1, i2}}
    new_d = {(i1, i2): a1 - a12 + w2, (i2, i1): a2 - w2}
    new_p = a0
    values = [vertex[i1], *new_d.values(), new_p]
    if min(values) < 0 or max(new_d.values()) > new_p:
        raise InternalError(
            f"transferred weights invalid: w(c1)={vertex[i1]}, w(c1,c2)={new_d[(i1, i2)]}, "
            f"w(c2,c1)={new_d[(i2, i1)]}, w(c1c2)={new_p}"
        )
    for k, x in new_d.items():
        if x:
            directed[k] = x
    if new_p:
        pair[(i1, i2)] = new_p
    wf = WeightFunction(tuple(vertex), dict(sorted(directed.items())), dict(sorted(pair.items())))
    out = WeightedTrigraph(block.trig, wf)
    return StableTransfer(out, table, block.vertices)


def is_valid(wt: WeightedTrigraph) -> bool:
    return not validate(wt)


__all__ = [
    "AlphaOracle",
    "CliqueTransfer",
    "CutsetAlphaTable",
    "ReductionResult",
    "StableTransfer",
    "WeightFunction",
    "WeightedTrigraph",
    "alpha_by_enumeration",
    "clique_cut_transfer",
    "cutset_alpha_table",
    "is_valid",
    "reduce",
    "restrict",
    "set_weight",
    "stable_cut_transfer",
    "stable_sets",
    "validate",
]
