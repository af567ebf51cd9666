#!/usr/bin/env python3
"""Census of loops up to isomorphism, order by order.

For each order, enumerates isomorphism-class representatives with identity 0,
then counts how many are associative (i.e. groups). Orders up to 6 finish in
seconds; order 6 alone takes a few seconds because 109 classes survive the
canonical-form filter.

Usage:
    python3 scripts/loop_census.py --max-order 6
    python3 scripts/loop_census.py --max-order 5 --show-tables
"""

import argparse
import sys
import time

from algcat.loops import enumerate_loops, is_associative


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--max-order",
        type=int,
        default=6,
        metavar="N",
        help="largest order to census (default 6)",
    )
    parser.add_argument(
        "--show-tables",
        action="store_true",
        help="print every Cayley table instead of just the counts",
    )
    args = parser.parse_args(argv)
    if args.max_order < 1:
        parser.error("--max-order must be at least 1")

    print(f"{'order':>5}  {'classes':>7}  {'associative':>11}  {'seconds':>7}")
    for n in range(1, args.max_order + 1):
        start = time.perf_counter()
        reps = enumerate_loops(n, max_order=args.max_order)
        elapsed = time.perf_counter() - start
        groups = sum(1 for loop in reps if is_associative(loop))
        print(f"{n:>5}  {len(reps):>7}  {groups:>11}  {elapsed:>7.2f}")
        if args.show_tables:
            for k, loop in enumerate(reps):
                tag = "group" if is_associative(loop) else "loop"
                print(f"  #{k} ({tag})")
                for row in loop.table:
                    print("   ", " ".join(str(v) for v in row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
