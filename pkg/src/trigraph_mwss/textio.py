"""Line-oriented text format for weighted trigraphs.

::

    # comment
    trigraph <n>
    e <u> <v>                         # strongly adjacent
    s <u> <v>                         # semi-adjacent
    w <u> <val>                       # vertex weight (default 0)
    sw <u> <v> <w(u,v)> <w(v,u)> <w(uv)>   # only on semi pairs

Unlisted pairs are strongly anti-adjacent.  Any duplicate or conflicting
line is an error, as is a weight line that breaks the weight-function rules.
:func:`dumps` writes the canonical form (sorted, zero weights omitted), so
``dumps(loads(dumps(x))) == dumps(x)`` byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidArgument, ParseError
from .trigraph import Trigraph
from .weighting import WeightedTrigraph, validate

HEADER = "trigraph"


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        if tok.lstrip("+-").isdigit():
            return int(tok)
    except ValueError:
        pass
    raise ParseError(f"line {lineno}: {what} must be an integer, got {tok!r}")


def loads(text: str) -> WeightedTrigraph:
    n: int | None = None
    strong: list[tuple[int, int]] = []
    semi: list[tuple[int, int]] = []
    pair_line: dict[tuple[int, int], int] = {}
    vertex: dict[int, int] = {}
    sw: dict[tuple[int, int], tuple[int, int, int, int]] = {}

    def vert(tok: str, lineno: int) -> int:
        v = _int(tok, lineno, "vertex")
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        return v

    def weight(tok: str, lineno: int) -> int:
        x = _int(tok, lineno, "weight")
        if x < 0:
            raise ParseError(f"line {lineno}: negative weight {x}")
        return x

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        tag, args = line[0], line[1:]
        if n is None:
            if tag != HEADER or len(args) != 1:
                raise ParseError(f"line {lineno}: expected 'trigraph <n>' header")
            n = _int(args[0], lineno, "vertex count")
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if tag == HEADER:
            raise ParseError(f"line {lineno}: second header")
        if tag in ("e", "s"):
            if len(args) != 2:
                raise ParseError(f"line {lineno}: '{tag}' takes two vertices")
            u, v = vert(args[0], lineno), vert(args[1], lineno)
            if u == v:
                raise ParseError(f"line {lineno}: pair of a vertex with itself")
            key = (min(u, v), max(u, v))
            if key in pair_line:
                raise ParseError(
                    f"line {lineno}: pair {u} {v} already given on line {pair_line[key]}"
                )
            pair_line[key] = lineno
            (strong if tag == "e" else semi).append(key)
        elif tag == "w":
            if len(args) != 2:
                raise ParseError(f"line {lineno}: 'w' takes a vertex and a weight")
            u = vert(args[0], lineno)
            if u in vertex:
                raise ParseError(f"line {lineno}: weight of vertex {u} given twice")
            vertex[u] = weight(args[1], lineno)
        elif tag == "sw":
            if len(args) != 5:
                raise ParseError(f"line {lineno}: 'sw' takes two vertices and three weights")
            u, v = vert(args[0], lineno), vert(args[1], lineno)
            if u == v:
                raise ParseError(f"line {lineno}: pair of a vertex with itself")
            a, b, p = (weight(t, lineno) for t in args[2:])
            key = (min(u, v), max(u, v))
            if key in sw:
                raise ParseError(f"line {lineno}: weights of pair {u} {v} given twice")
            if u > v:
                a, b = b, a
            sw[key] = (a, b, p, lineno)
        else:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")
    if n is None:
        raise ParseError("missing 'trigraph <n>' header")
    g = Trigraph.from_pairs(n, strong, semi)
    directed, pair = {}, {}
    semi_set = set(semi)
    for (u, v), (a, b, p, lineno) in sw.items():
        if (a or b or p) and (u, v) not in semi_set:
            raise ParseError(f"line {lineno}: pair weights on a pair that is not semi-adjacent")
        if max(a, b) > p:
            raise ParseError(f"line {lineno}: w(u,v) and w(v,u) may not exceed w(uv)")
        if a:
            directed[(u, v)] = a
        if b:
            directed[(v, u)] = b
        if p:
            pair[(u, v)] = p
    try:
        wt = WeightedTrigraph.make(g, vertex, directed, pair)
    except InvalidArgument as exc:  # pragma: no cover - caught by the checks above
        raise ParseError(str(exc)) from exc
    return wt


def dumps(wt: WeightedTrigraph | Trigraph) -> str:
    if isinstance(wt, Trigraph):
        wt = WeightedTrigraph.unweighted(wt, 0)
    problems = validate(wt)
    if problems:
        raise InvalidArgument(problems[0])
    g, w = wt.g, wt.w
    out = [f"{HEADER} {g.n}"]
    out += [f"e {u} {v}" for u, v in g.strong_pairs]
    out += [f"s {u} {v}" for u, v in g.semi_pairs]
    out += [f"w {u} {x}" for u, x in enumerate(w.vertex) if x]
    for u, v in g.semi_pairs:
        a, b, p = w.dw(u, v), w.dw(v, u), w.pw(u, v)
        if a or b or p:
            out.append(f"sw {u} {v} {a} {b} {p}")
    return "\n".join(out) + "\n"


def load(path: str | Path) -> WeightedTrigraph:
    return loads(Path(path).read_text())


def dump(wt: WeightedTrigraph | Trigraph, path: str | Path) -> None:
    Path(path).write_text(dumps(wt))
