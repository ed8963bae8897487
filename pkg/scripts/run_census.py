#!/usr/bin/env python3
"""Run the ai-semiring census for a range of orders and report counts.

Example:
    python scripts/run_census.py --orders 1 2 3 4 --out results/census4 --workers 4
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from aisemiring.census import default_workers, enumerate_ai_semirings, write_census


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+", default=[1, 2, 3, 4])
    parser.add_argument("--out", help="directory to persist the largest census")
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()
    workers = args.workers if args.workers is not None else default_workers()

    last = None
    for n in args.orders:
        result = enumerate_ai_semirings(n, workers=workers)
        print(
            f"order {n}: {result.count} ai-semirings up to isomorphism, "
            f"{len(result.height1)} of additive height 1  [{result.elapsed:.2f}s]"
        )
        last = result
    if args.out and last is not None:
        index = write_census(last, args.out)
        print(f"wrote {last.count} semiring files and {index}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
