#!/usr/bin/env python3
"""Exhaustively compare the syntactic criteria with brute-force evaluation.

Enumerates every simple identity u = u + q built from words over a fixed
variable pool, runs each of the ten criteria next to exhaustive evaluation on
its semiring, and reports any disagreement.

Example:
    python scripts/criteria_sweep.py --max-summands 3 --max-length 3
"""

import argparse
import itertools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from aisemiring import catalog, criteria
from aisemiring.evaluate import BulkEvaluator
from aisemiring.terms import SimpleIdentity, Term, Word


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--variables", default="xyz", help="variable pool, one letter each")
    parser.add_argument("--max-length", type=int, default=3)
    parser.add_argument("--max-summands", type=int, default=3)
    parser.add_argument("--criteria", nargs="+", default=sorted(criteria.CRITERIA))
    args = parser.parse_args()

    variables = tuple(args.variables)
    words = [
        Word(t)
        for k in range(1, args.max_length + 1)
        for t in itertools.product(variables, repeat=k)
    ]
    u_sets = [
        combo
        for r in range(1, args.max_summands + 1)
        for combo in itertools.combinations(words, r)
    ]
    names = [n.upper() for n in args.criteria]
    oracles = {name: catalog.get(name).semiring for name in names}
    bulks = {name: BulkEvaluator(oracles[name], variables) for name in names}
    qvecs = {name: [bulks[name].word_vector(w) for w in words] for name in names}

    t0 = time.monotonic()
    disagreements = 0
    checked = 0
    for u_words in u_sets:
        u = Term(u_words)
        uvecs = {name: bulks[name].term_vector(u) for name in names}
        for qi, q in enumerate(words):
            si = SimpleIdentity(u, q)
            for name in names:
                claim = criteria.CRITERIA[name](si).holds
                truth = bulks[name].absorbs(uvecs[name], qvecs[name][qi])
                checked += 1
                if claim != truth:
                    disagreements += 1
                    print(f"DISAGREE {name}: {si} criterion={claim} oracle={truth}")
    elapsed = time.monotonic() - t0
    print(
        f"{checked} comparisons over {len(u_sets) * len(words)} simple identities, "
        f"{disagreements} disagreements, {elapsed:.1f}s"
    )
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
