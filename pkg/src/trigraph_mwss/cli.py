"""Command-line front end.

Exit codes
    0  success (``validate``: the instance is {ISK4, wheel}-free)
    2  the input file does not parse
    3  invalid input: the instance is outside the class (detected while
       solving, or reported by ``validate``)
    4  internal error
    5  invalid argument: bad flags, unreadable paths, size limits exceeded
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .errors import InvalidArgument, InvalidInput, ParseError, SizeLimitExceeded
from .solver import alpha, decompose, max_stable_set_graph
from .testkit import (
    CLASSES,
    GeneratorConfig,
    brute_alpha,
    find_obstruction,
    gen_instances,
    gen_large_glued,
)
from .textio import dumps, load

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID_INPUT = 3
EXIT_INTERNAL = 4
EXIT_INVALID_ARGUMENT = 5

REPORT_SCHEMA = "trigraph-mwss/report/1"
BENCH_SCHEMA = "trigraph-mwss/bench/1"


@dataclass
class RunReport:
    alpha: int
    elapsed_ms: float
    recursion_steps: int
    basic_class_histogram: dict[str, int]
    stable_set: list[int] | None = None
    trace_path: str | None = None
    schema: str = field(default=REPORT_SCHEMA)


def _print_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


# -- subcommands -------------------------------------------------------------


def cmd_solve(args) -> int:
    wt = load(args.input)
    if args.extract and wt.g.semi_pairs:
        raise InvalidArgument("--extract needs a graph input (no 's' lines)")
    res = alpha(wt, trace=args.trace is not None)
    report = RunReport(res.alpha, round(res.elapsed_ms, 3), res.steps, res.class_histogram)
    if args.extract:
        ext = max_stable_set_graph(wt)
        report.stable_set = sorted(ext.stable_set)
    if args.trace is not None:
        Path(args.trace).write_text(res.trace.to_json())
        report.trace_path = str(args.trace)
    if args.json:
        _print_json(asdict(report))
    else:
        print(f"alpha {report.alpha}")
        if report.stable_set is not None:
            print("stable_set " + " ".join(map(str, report.stable_set)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    wt = load(args.input)
    tr = decompose(wt.g)
    if args.dot is not None:
        text = tr.to_dot()
        if args.dot == "-":
            sys.stdout.write(text)
            return EXIT_OK
        Path(args.dot).write_text(text)
    sys.stdout.write(tr.to_json())
    return EXIT_OK


def cmd_gen(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {"seed": args.seed, "files": []}
    if args.large is not None:
        for i in range(args.count):
            seed = args.seed + i
            wt = gen_large_glued(seed, args.large, weight_max=args.weight_max)
            name = f"large_n{args.large}_s{seed}.txt"
            (out / name).write_text(dumps(wt))
            manifest["files"].append({"file": name, "n": wt.n, "class": "glued-large", "seed": seed})
        manifest["generator"] = "large-glued"
    else:
        mix = tuple((c, 1.0 if c in args.classes else 0.0) for c in CLASSES)
        config = GeneratorConfig(
            seed=args.seed,
            n_range=(args.n_min, args.n_max),
            weight_max=args.weight_max,
            class_mix=mix,
        )
        stream = gen_instances(config)
        for i in range(args.count):
            cls, wt = next(stream)
            name = f"inst_{i:05d}.txt"
            (out / name).write_text(dumps(wt))
            manifest["files"].append({"file": name, "n": wt.n, "class": cls})
        manifest["config"] = {
            "n_range": list(config.n_range),
            "weight_max": config.weight_max,
            "class_mix": [list(x) for x in config.class_mix],
        }
    (out / "manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    print(f"wrote {args.count} instances to {out}")
    return EXIT_OK


def cmd_validate(args) -> int:
    wt = load(args.input)
    found = find_obstruction(wt.g)
    if found is None:
        print("free: no ISK4 and no wheel in any realization")
        return EXIT_OK
    verdict = "not wheel-free" if found.kind == "wheel" else "not ISK4-free"
    extra = f" center {wt.g.labels[found.center]}" if found.center is not None else ""
    print(f"{verdict}: vertices {' '.join(str(wt.g.labels[v]) for v in found.vertices)}{extra}")
    return EXIT_INVALID_INPUT


def cmd_oracle(args) -> int:
    wt = load(args.input)
    print(f"alpha {brute_alpha(wt, limit=args.limit)}")
    return EXIT_OK


def _time_one(path: str, repeat: int) -> tuple[int, float]:
    wt = load(path)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        alpha(wt, trace=False)
        times.append(time.perf_counter() - t)
    return wt.n, min(times)


def loglog_slope(sizes, seconds) -> float | None:
    pts = [(math.log(n), math.log(t)) for n, t in zip(sizes, seconds) if t > 0]
    if len(pts) < 2:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0:
        return None
    return sum((x - mx) * (y - my) for x, y in pts) / sxx


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    files = sorted(corpus.rglob("*.txt"))
    if not files:
        raise InvalidArgument(f"no *.txt instances in {corpus}")
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_time_one, map(str, files), [args.repeat] * len(files)))
    else:
        results = [_time_one(str(p), args.repeat) for p in files]
    by_n: dict[int, list[float]] = {}
    for n, secs in results:
        by_n.setdefault(n, []).append(secs)
    rows = [
        {"n": n, "count": len(ts), "median_s": statistics.median(ts)}
        for n, ts in sorted(by_n.items())
    ]
    slope = loglog_slope([r["n"] for r in rows], [r["median_s"] for r in rows])
    if args.json:
        _print_json({"schema": BENCH_SCHEMA, "rows": rows, "loglog_slope": slope})
    else:
        print(f"{'n':>6} {'count':>6} {'median_s':>10}")
        for r in rows:
            print(f"{r['n']:>6} {r['count']:>6} {r['median_s']:>10.4f}")
        print("loglog_slope " + ("n/a" if slope is None else f"{slope:.3f}"))
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="trigraph-mwss",
        description="Exact maximum-weight stable sets in {ISK4, wheel}-free trigraphs.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute alpha of an instance file")
    s.add_argument("input")
    s.add_argument("--extract", action="store_true", help="also print a maximum stable set (graphs only)")
    s.add_argument("--trace", metavar="PATH", help="write the decomposition trace as JSON")
    s.add_argument("--json", action="store_true", help="print a machine-readable report")
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("decompose", help="print the decomposition trace (JSON)")
    d.add_argument("input")
    d.add_argument("--dot", metavar="PATH", help="also write the block tree in DOT format ('-' for stdout only)")
    d.set_defaults(func=cmd_decompose)

    g = sub.add_parser("gen", help="generate validated instances")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--out", required=True)
    g.add_argument("--n-min", type=int, default=4)
    g.add_argument("--n-max", type=int, default=14)
    g.add_argument("--weight-max", type=int, default=20)
    g.add_argument("--classes", nargs="+", choices=CLASSES, default=list(CLASSES))
    g.add_argument("--large", type=int, metavar="N", help="emit large glued instances with exactly N vertices")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="exhaustive ISK4 / wheel check (small inputs)")
    v.add_argument("input")
    v.set_defaults(func=cmd_validate)

    o = sub.add_parser("oracle", help="alpha by exhaustive enumeration (small inputs)")
    o.add_argument("input")
    o.add_argument("--limit", type=int, default=16)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="median solve time per size over a corpus directory")
    b.add_argument("corpus")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (InvalidArgument, SizeLimitExceeded, OSError) as exc:
        print(f"invalid argument: {exc}", file=sys.stderr)
        return EXIT_INVALID_ARGUMENT
    except ValueError as exc:  # e.g. an inconsistent generator configuration
        print(f"invalid argument: {exc}", file=sys.stderr)
        return EXIT_INVALID_ARGUMENT
    except Exception as exc:  # noqa: BLE001 - every other failure is ours
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
