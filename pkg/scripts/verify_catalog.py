#!/usr/bin/env python3
"""Re-check everything the catalog asserts: table validity, bundled bases,
structural claims, and nonfinite-basis witnesses."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from aisemiring import catalog, construct
from aisemiring.core import validate
from aisemiring.evaluate import check_basis


def main() -> int:
    bad = 0

    for name in catalog.names():
        entry = catalog.get(name)
        if not validate(entry.semiring.add, entry.semiring.mul).valid:
            print(f"INVALID TABLE {name}")
            bad += 1

    for name in catalog.BASIS_NAMES:
        entry = catalog.get(name)
        report = check_basis(entry.semiring, entry.basis)
        mark = "ok" if report.all_hold else "FAIL"
        print(f"basis {name}: {mark} ({len(entry.basis)} identities)")
        bad += 0 if report.all_hold else 1

    results = catalog.verify_all_claims()
    for r in results:
        if not r.ok:
            print(f"CLAIM FAIL {r.entry}: {r.claim.label}")
            bad += 1
    print(f"claims: {sum(r.ok for r in results)}/{len(results)} pass")

    for entry in catalog.entries(order=4, status="nonfinitely-based"):
        report = construct.nfb_witness(entry.semiring)
        mark = "ok" if report.conclusion else "FAIL"
        print(f"nfb witness {entry.name}: {mark}")
        bad += 0 if report.conclusion else 1

    print("all good" if bad == 0 else f"{bad} problems")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
