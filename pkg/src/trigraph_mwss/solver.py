"""The top-level recursion and stable-set extraction for graphs.

``alpha`` repeatedly takes an extreme good cut-partition, solves the basic
A-block on each reduction ``A | C'`` (at most eight of them), folds the
result into the B-block's weights and continues on the B-block.  When no
good cut-partition is left, the remaining trigraph is basic and is solved
directly.  The loop is iterative, so depth is not limited by the Python
stack.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .basic import BasicClass, alpha_basic, classify_basic
from .decomposition import (
    CutKind,
    DecompositionTrace,
    Side,
    TraceStep,
    extreme_cut_partition,
    make_block,
)
from .errors import (
    InternalError,
    InvalidArgument,
    InvalidInput,
    NotLineGraph,
    NotSeriesParallel,
)
from .trigraph import Trigraph, is_stable_set
from .weighting import (
    WeightedTrigraph,
    clique_cut_transfer,
    restrict,
    set_weight,
    stable_cut_transfer,
)


@dataclass
class SolveResult:
    alpha: int
    trace: DecompositionTrace | None = None
    steps: int = 0
    class_histogram: dict[str, int] = field(default_factory=dict)
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class ExtractionResult:
    stable_set: frozenset[int]  # labels of the input
    weight: int


def _solve_basic(wt: WeightedTrigraph, hist: Counter, cls: BasicClass | None = None) -> int:
    if cls is None:
        cls = classify_basic(wt.g)
    hist[cls.value] += 1
    try:
        return alpha_basic(wt, cls)
    except (NotLineGraph, NotSeriesParallel, InvalidArgument) as exc:
        raise InvalidInput(
            f"a piece on {wt.n} vertices classified as {cls.value} could not be solved: {exc}"
        ) from exc


def _sorted_labels(g: Trigraph, xs) -> list[int]:
    return sorted(g.labels[v] for v in xs)


def alpha(wt: WeightedTrigraph, *, trace: bool = True) -> SolveResult:
    """Exact stability number of a weighted {ISK4, wheel}-free trigraph.

    ``trace=False`` skips recording the decomposition (benchmark fast path).
    Inputs outside the class may raise :class:`InvalidInput`, or
    :class:`InternalError` when a transferred weight function turns out
    invalid.
    """
    started = time.perf_counter()
    hist: Counter = Counter()
    record = DecompositionTrace(wt.n) if trace else None
    current = wt
    offset = 0
    steps = 0

    def block_alpha(red: WeightedTrigraph) -> int:
        return _solve_basic(red, hist)

    while True:
        g = current.g
        if g.n == 0:
            value = offset + set_weight(current, ())
            if record is not None:
                record.terminal_class = "null"
            break
        ext = extreme_cut_partition(g)
        part = ext.partition
        if part is None:
            cls = classify_basic(g)
            value = offset + _solve_basic(current, hist, cls)
            if record is not None:
                record.terminal_labels = list(g.labels)
                record.terminal_class = cls.value
            break
        steps += 1
        a_class = classify_basic(make_block(g, part, Side.A).trig).value if trace else ""
        if part.kind is CutKind.CLIQUE:
            tr = clique_cut_transfer(current, part, block_alpha)
            offset += tr.k
            k = tr.k
        else:
            tr = stable_cut_transfer(current, part, block_alpha)
            k = None
        if record is not None:
            record.steps.append(
                TraceStep(
                    kind=part.kind.value,
                    a=_sorted_labels(g, part.a),
                    b=_sorted_labels(g, part.b),
                    c=_sorted_labels(g, part.c),
                    a_block_class=a_class,
                    refinement_rounds=ext.rounds,
                    b_size=len(part.b) + len(part.c),
                    alpha_table=tr.table.as_labelled(g.labels),
                    offset=k,
                )
            )
        if tr.wb.n >= g.n:
            raise InternalError("B-block did not shrink")
        current = tr.wb
    return SolveResult(
        value, record, steps, dict(sorted(hist.items())), (time.perf_counter() - started) * 1e3
    )


def decompose(g: Trigraph) -> DecompositionTrace:
    """The same recursion without weights: the sequence of extreme
    cut-partitions and the final basic piece."""
    record = DecompositionTrace(g.n)
    current = g
    while True:
        if current.n == 0:
            record.terminal_class = "null"
            return record
        ext = extreme_cut_partition(current)
        part = ext.partition
        if part is None:
            record.terminal_labels = list(current.labels)
            record.terminal_class = classify_basic(current).value
            return record
        record.steps.append(
            TraceStep(
                kind=part.kind.value,
                a=_sorted_labels(current, part.a),
                b=_sorted_labels(current, part.b),
                c=_sorted_labels(current, part.c),
                a_block_class=classify_basic(make_block(current, part, Side.A).trig).value,
                refinement_rounds=ext.rounds,
                b_size=len(part.b) + len(part.c),
            )
        )
        current = make_block(current, part, Side.B).trig


def max_stable_set_graph(wg: WeightedTrigraph) -> ExtractionResult:
    """A maximum-weight stable set of a weighted graph, by self-reduction.

    Take the vertex ``v`` with the lowest label; if ``w(v) + alpha(G - N[v])``
    reaches ``alpha(G)`` keep ``v`` and continue in ``G - N[v]``, otherwise
    continue in ``G - v``.  Costs at most ``2n`` solver calls.
    """
    if wg.g.semi_pairs:
        raise InvalidArgument("extraction is only defined for graphs (no semi-adjacent pairs)")
    target = alpha(wg, trace=False).alpha
    total = target
    chosen: list[int] = []
    current = wg
    while current.n:
        g = current.g
        v = 0  # labels increase with the index, so index 0 has the lowest label
        closed = (v,) + g.neighbors[v]
        rest, _ = restrict(current, [u for u in range(g.n) if u not in closed])
        with_v = current.w.vertex[v] + alpha(rest, trace=False).alpha
        if with_v == target:
            chosen.append(g.labels[v])
            target -= current.w.vertex[v]
            current = rest
        else:
            current, _ = restrict(current, range(1, g.n))
    labels = wg.g.labels
    index = {lab: i for i, lab in enumerate(labels)}
    s = frozenset(chosen)
    weight = sum(wg.w.vertex[index[lab]] for lab in s)
    if weight != total or not is_stable_set(wg.g, [index[lab] for lab in s]):
        raise InternalError("extraction produced a set that does not attain alpha")
    return ExtractionResult(s, weight)


__all__ = ["ExtractionResult", "SolveResult", "alpha", "decompose", "max_stable_set_graph"]
