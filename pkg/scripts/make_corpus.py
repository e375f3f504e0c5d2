#!/usr/bin/env python3
"""Write the reference corpora to disk.

* ``<out>/small``: validated instances with n <= 14 and weights <= 20 (oracle-checkable);
* ``<out>/scaling``: large glued instances for n in the scaling sizes.
"""

from __future__ import annotations

import argparse
import logging

from trigraph_mwss.cli import main as cli

log = logging.getLogger("make_corpus")


def parse_args(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out", default="corpus")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=1000, help="number of small instances")
    p.add_argument("--sizes", type=int, nargs="*", default=[100, 200, 400, 800, 1000])
    p.add_argument("--per-size", type=int, default=3)
    return p.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    code = cli(["gen", "--seed", str(args.seed), "--count", str(args.count), "--out", f"{args.out}/small"])
    if code:
        return code
    for n in args.sizes:
        log.info("scaling instances with n = %d", n)
        code = cli([
            "gen", "--seed", str(args.seed), "--count", str(args.per_size),
            "--large", str(n), "--out", f"{args.out}/scaling/n{n}",
        ])
        if code:
            return code
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
