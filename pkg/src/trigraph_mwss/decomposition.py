"""Good cut-partitions, blocks and extreme decompositions.

Candidate cutsets are tried in a fixed order so that results (and therefore
traces) are reproducible:

1. strong cliques by size -- the empty set, single vertices, strongly
   adjacent pairs, strong triangles -- each in lexicographic vertex order;
2. stable pairs in lexicographic order.

The first candidate whose removal leaves at least two components wins, and
its components are grouped as (component with the smallest vertex, rest).

Every trigraph built by this package keeps its labels increasing with the
internal index, so "smallest vertex" and "smallest label" agree.

The searches are exact but avoid testing every candidate separately: cut
vertices come from one low-link pass, and for a fixed ``u`` all pairs
``{u, v}`` that separate are the cut vertices of ``G - u``.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument
from .trigraph import (
    SEMI,
    STRONG_ADJ,
    Trigraph,
    articulation_points,
    components,
    is_cutset,
    shortest_path,
)


class CutKind(str, enum.Enum):
    CLIQUE = "clique"
    STABLE = "stable"


class Side(str, enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class CutPartition:
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]
    kind: CutKind

    def side(self, side: Side) -> frozenset[int]:
        return self.a if side is Side.A else self.b

    def relabel(self, labels: tuple[int, ...]) -> CutPartition:
        """Same partition expressed in vertex labels instead of indices."""
        return CutPartition(
            frozenset(labels[v] for v in self.a),
            frozenset(labels[v] for v in self.b),
            frozenset(labels[v] for v in self.c),
            self.kind,
        )


@dataclass(frozen=True)
class Block:
    trig: Trigraph
    side: Side
    vertices: tuple[int, ...]  # block index -> index in the parent trigraph

    @property
    def label_map(self) -> dict[int, int]:
        return dict(enumerate(self.trig.labels))


def check_cut_partition(g: Trigraph, part: CutPartition) -> None:
    """Raise :class:`InvalidArgument` unless ``part`` is a good cut-partition of ``g``."""
    a, b, c = part.a, part.b, part.c
    for s in (a, b, c):
        g.check_subset(s)
    if a & b or a & c or b & c or len(a) + len(b) + len(c) != g.n:
        raise InvalidArgument("A, B, C must partition the vertex set")
    if not a or not b:
        raise InvalidArgument("A and B must be non-empty")
    idx_a = np.fromiter(a, dtype=np.intp)
    idx_b = np.fromiter(b, dtype=np.intp)
    if (g.theta[np.ix_(idx_a, idx_b)] != -1).any():
        raise InvalidArgument("A is not strongly anti-complete to B")
    cs = sorted(c)
    if part.kind is CutKind.CLIQUE:
        if len(cs) > 3:
            raise InvalidArgument("clique cutset larger than three")
        for i, u in enumerate(cs):
            for v in cs[i + 1:]:
                if g.theta[u, v] != STRONG_ADJ:
                    raise InvalidArgument("C is not a strong clique")
    elif part.kind is CutKind.STABLE:
        if len(cs) != 2:
            raise InvalidArgument("stable cutset must have two vertices")
        c1, c2 = cs
        if g.theta[c1, c2] == STRONG_ADJ:
            raise InvalidArgument("C is not a stable set")
        for x in (a, b):
            if shortest_path(g, c1, c2, within=x | c) is None:
                raise InvalidArgument("no narrow path between the cutset vertices on one side")
    else:
        raise InvalidArgument(f"unknown kind {part.kind!r}")


def _split(g: Trigraph, c: Iterable[int], kind: CutKind) -> CutPartition:
    cs = frozenset(c)
    comps = components(g, cs)
    first = comps[0]
    rest = frozenset().union(*comps[1:])
    return CutPartition(first, rest, cs, kind)


def find_good_cut_partition(g: Trigraph) -> CutPartition | None:
    """First good cut-partition in the canonical candidate order, or None.

    ``None`` certifies that ``g`` has no clique cutset of size at most three
    and no stable 2-cutset.
    """
    n = g.n
    if n < 2:
        return None
    if len(components(g)) >= 2:
        return _split(g, (), CutKind.CLIQUE)

    cut_vertices = articulation_points(g)
    if cut_vertices:
        return _split(g, (min(cut_vertices),), CutKind.CLIQUE)

    strong = g.strong_neighbors
    for u in range(n):
        later = [v for v in strong[u] if v > u]
        if not later:
            continue
        arts = articulation_points(g, (u,))
        hits = [v for v in later if v in arts]
        if hits:
            return _split(g, (u, min(hits)), CutKind.CLIQUE)

    sets = g.strong_neighbor_sets
    for u in range(n):
        for v in strong[u]:
            if v <= u:
                continue
            for x in sorted(sets[u] & sets[v]):
                if x > v and is_cutset(g, (u, v, x)):
                    return _split(g, (u, v, x), CutKind.CLIQUE)

    theta = g.theta
    for u in range(n):
        later = (np.flatnonzero(theta[u, u + 1:] <= SEMI) + (u + 1)).tolist()
        if not later:
            continue
        arts = articulation_points(g, (u,))
        hits = [v for v in later if v in arts]
        if hits:
            return _split(g, (u, min(hits)), CutKind.STABLE)
    return None


def brute_good_cut_partition_exists(g: Trigraph) -> bool:
    """Test oracle: try every strong clique of size <= 3 and every stable pair."""
    from itertools import combinations

    n = g.n
    theta = g.theta
    for size in range(4):
        for c in combinations(range(n), size):
            if all(theta[u, v] == STRONG_ADJ for u, v in combinations(c, 2)) and is_cutset(g, c):
                return True
    for u, v in combinations(range(n), 2):
        if theta[u, v] <= SEMI and is_cutset(g, (u, v)):
            return True
    return False


def make_block(g: Trigraph, part: CutPartition, side: Side | str) -> Block:
    """The X-block: ``g[X | C]``, with the cutset pair made semi-adjacent for
    stable partitions."""
    side = Side(side)
    if not part.a or not part.b:
        raise InvalidArgument("A and B must be non-empty")
    verts = tuple(sorted(part.side(side) | part.c))
    idx = np.asarray(verts, dtype=np.intp)
    theta = np.array(g.theta[np.ix_(idx, idx)])
    if part.kind is CutKind.STABLE:
        c1, c2 = (verts.index(c) for c in sorted(part.c))
        theta[c1, c2] = theta[c2, c1] = SEMI
    labels = tuple(g.labels[v] for v in verts)
    return Block(Trigraph(theta, labels), side, verts)


def refine_cut_partition(g: Trigraph, part: CutPartition) -> CutPartition | None:
    """Either None (the A-block has no good cut-partition) or a good
    cut-partition of ``g`` whose ``A | C`` is strictly inside ``part``'s."""
    block = make_block(g, part, Side.A)
    inner = find_good_cut_partition(block.trig)
    if inner is None:
        return None
    back = block.vertices
    a1 = frozenset(back[v] for v in inner.a)
    b1 = frozenset(back[v] for v in inner.b)
    c1 = frozenset(back[v] for v in inner.c)
    if not part.c <= (b1 | c1):
        a1, b1 = b1, a1
    return CutPartition(a1, part.b | b1, c1, inner.kind)


@dataclass
class ExtremeResult:
    partition: CutPartition | None
    rounds: int = 0
    history: list[CutPartition] = field(default_factory=list)


def extreme_cut_partition(g: Trigraph) -> ExtremeResult:
    """Step 1 / Step 2 loop with the refinement history kept."""
    part = find_good_cut_partition(g)
    res = ExtremeResult(part)
    if part is None:
        return res
    res.history.append(part)
    while True:
        finer = refine_cut_partition(g, part)
        if finer is None:
            res.partition = part
            return res
        if len(finer.a | finer.c) >= len(part.a | part.c):
            raise AssertionError("refinement did not shrink A | C")
        part = finer
        res.rounds += 1
        res.history.append(part)


def find_extreme_cut_partition(g: Trigraph) -> CutPartition | None:
    """None when ``g`` admits no good cut-partition (so ``g`` is basic when it
    is {ISK4, wheel}-free); otherwise a good cut-partition whose A-block admits
    none (so that block is basic)."""
    return extreme_cut_partition(g).partition


# -- traces -----------------------------------------------------------------

TRACE_SCHEMA = "trigraph-mwss/trace/1"


@dataclass
class TraceStep:
    kind: str
    a: list[int]
    b: list[int]
    c: list[int]
    a_block_class: str
    refinement_rounds: int
    b_size: int
    alpha_table: dict[str, int] | None = None
    offset: int | None = None

    def as_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "A": self.a,
            "B": self.b,
            "C": self.c,
            "a_block_class": self.a_block_class,
            "refinement_rounds": self.refinement_rounds,
            "b_size": self.b_size,
        }
        if self.alpha_table is not None:
            d["alpha_table"] = self.alpha_table
        if self.offset is not None:
            d["offset"] = self.offset
        return d


@dataclass
class DecompositionTrace:
    """Recursion record: labels always refer to the input instance."""

    n: int
    steps: list[TraceStep] = field(default_factory=list)
    terminal_labels: list[int] = field(default_factory=list)
    terminal_class: str = ""

    def as_dict(self) -> dict:
        return {
            "schema": TRACE_SCHEMA,
            "n": self.n,
            "steps": [s.as_dict() for s in self.steps],
            "terminal": {"class": self.terminal_class, "vertices": self.terminal_labels},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_dot(self) -> str:
        """Block tree: each step splits off an A-block; the chain follows B."""
        lines = ["digraph decomposition {", "  node [shape=box];"]
        for i, s in enumerate(self.steps):
            lines.append(
                f'  a{i} [label="A-block {i}\\n{s.a_block_class}\\n|A|={len(s.a)} C={s.c}"];'
            )
            lines.append(f'  g{i} [label="G{i}\\n{s.kind} cut\\nn={len(s.a) + len(s.b) + len(s.c)}"];')
            lines.append(f"  g{i} -> a{i};")
            nxt = f"g{i + 1}" if i + 1 < len(self.steps) else "t"
            lines.append(f"  g{i} -> {nxt};")
        lines.append(
            f'  t [label="terminal\\n{self.terminal_class}\\nn={len(self.terminal_labels)}"];'
        )
        lines.append("}")
        return "\n".join(lines) + "\n"
