"""Enumerate all ai-semirings of a given order up to isomorphism.

Strategy: enumerate semilattices (the additive reducts) up to isomorphism,
then for each one backtrack over the multiplications.  Distributivity makes a
multiplication a function of its values on pairs of join-irreducible elements,
so only those cells are searched; every other product is the forced sum over
the join-irreducibles below the factors.  Constraints are checked as soon as
the cells they mention are filled, and finished tables are deduplicated by
canonical form.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteAiSemiring, Table, additive_height, canonical_form, validate

SEMILATTICE_MAX_ORDER = 6


@dataclass(frozen=True)
class CensusResult:
    order: int
    semirings: tuple[FiniteAiSemiring, ...]
    height1: tuple[FiniteAiSemiring, ...]
    elapsed: float

    @property
    def count(self) -> int:
        return len(self.semirings)


def _canonical_add(add: Table) -> Table:
    """Relabel so the addition table alone is lexicographically least."""
    n = len(add)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        key = tuple(perm[add[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or key < best:
            best = key
    return tuple(tuple(best[a * n + b] for b in range(n)) for a in range(n))


@lru_cache(maxsize=None)
def enumerate_semilattices(n: int) -> tuple[Table, ...]:
    """All commutative idempotent associative tables on n elements, one per
    isomorphism class, each in canonical relabeling.

    Works by enumerating partial orders whose labeling is a linear extension
    (i below j implies i < j) and keeping those where every pair has a join.
    """
    if not 1 <= n <= SEMILATTICE_MAX_ORDER:
        raise ValueError(f"order must be between 1 and {SEMILATTICE_MAX_ORDER}")
    if n == 1:
        return (((0,),),)
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[Table, None] = {}
    for bits in range(2 ** len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                leq[i][j] = True
        ok = True
        for i, j in pairs:
            if leq[i][j] and not all(leq[i][k] for k in range(n) if leq[j][k]):
                ok = False
                break
        if not ok:
            continue
        add = [[0] * n for _ in range(n)]
        for i in range(n):
            add[i][i] = i
        for i, j in pairs:
            uppers = [k for k in range(n) if leq[i][k] and leq[j][k]]
            least = [u for u in uppers if all(leq[u][v] for v in uppers)]
            if len(least) != 1:
                ok = False
                break
            add[i][j] = add[j][i] = least[0]
        if not ok:
            continue
        found[_canonical_add(tuple(map(tuple, add)))] = None
    return tuple(sorted(found))


def _join_irreducibles(add: Table) -> list[int]:
    n = len(add)
    joins = {add[a][b] for a, b in itertools.combinations(range(n), 2) if add[a][b] not in (a, b)}
    leq = [[add[a][b] == b for b in range(n)] for a in range(n)]
    ji = [x for x in range(n) if x not in joins]
    ji.sort(key=lambda x: (sum(leq[y][x] for y in range(n)), x))
    return ji


def _multiplications(add: Table) -> list[Table]:
    """All multiplication tables making ``add`` an ai-semiring (labeled, not
    deduplicated).

    Backtracks over the join-irreducible cells only; all other products are
    the forced sums over the join-irreducibles below the factors.  Constraints
    are first attempted at the last cell of their known needs; a constraint
    that still touches an unfilled cell is re-watched at that cell, so each
    check fires at the earliest moment it is decidable on the current path.
    """
    n = len(add)
    rng = range(n)
    leq = [[add[a][b] == b for b in rng] for a in rng]
    ji = _join_irreducibles(add)
    jbelow = {x: tuple(p for p in ji if leq[p][x]) for x in rng}

    # cells in growing-square order over the join-irreducibles
    cells: list[tuple[int, int]] = []
    for k in range(len(ji)):
        cells.extend((ji[i], ji[k]) for i in range(k))
        cells.extend((ji[k], ji[j]) for j in range(k))
        cells.append((ji[k], ji[k]))
    pos = {cell: t for t, cell in enumerate(cells)}

    values: dict[tuple[int, int], int] = {}

    def ext(e: int, f: int) -> int:
        acc = -1
        for p in jbelow[e]:
            for q in jbelow[f]:
                v = values[(p, q)]
                acc = v if acc < 0 else add[acc][v]
        return acc

    watched: list[list] = [[] for _ in cells]

    for (p, q), (p2, q2) in itertools.combinations(cells, 2):
        if leq[p][p2] and leq[q][q2]:
            lo, hi = (p, q), (p2, q2)
        elif leq[p2][p] and leq[q2][q]:
            lo, hi = (p2, q2), (p, q)
        else:
            continue

        def monotone(lo=lo, hi=hi):
            return add[values[lo]][values[hi]] == values[hi]

        watched[max(pos[lo], pos[hi])].append(monotone)

    for a, b in itertools.combinations(rng, 2):
        if leq[a][b] or leq[b][a]:
            continue
        j = add[a][b]
        for c in rng:
            trigger = max(
                max((pos[(p, c2)] for p in jbelow[j] for c2 in jbelow[c]), default=0),
                max((pos[(c2, p)] for p in jbelow[j] for c2 in jbelow[c]), default=0),
            )

            def distributes(a=a, b=b, c=c, j=j):
                if ext(j, c) != add[ext(a, c)][ext(b, c)]:
                    return False
                return ext(c, j) == add[ext(c, a)][ext(c, b)]

            watched[trigger].append(distributes)

    for p, q, r in itertools.product(ji, repeat=3):

        def assoc(p=p, q=q, r=r):
            return ext(values[(p, q)], r) == ext(p, values[(q, r)])

        watched[max(pos[(p, q)], pos[(q, r)])].append(assoc)

    results: list[Table] = []
    total = len(cells)

    def fill(t: int) -> None:
        if t == total:
            full = tuple(tuple(ext(a, b) for b in rng) for a in rng)
            if not validate(add, full).valid:
                raise RuntimeError("search produced an invalid table; constraint bug")
            results.append(full)
            return
        cell = cells[t]
        queue = watched[t]
        for v in rng:
            values[cell] = v
            deferred = []
            ok = True
            for check in queue:
                try:
                    if not check():
                        ok = False
                        break
                except KeyError as missing:
                    later = pos[missing.args[0]]
                    watched[later].append(check)
                    deferred.append(later)
            if ok:
                fill(t + 1)
            for later in reversed(deferred):
                watched[later].pop()
        del values[cell]

    fill(0)
    return results


def _addition_automorphisms(add: Table) -> list[tuple[int, ...]]:
    n = len(add)
    out = []
    for perm in itertools.permutations(range(n)):
        if all(perm[add[a][b]] == add[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            out.append(perm)
    return out


def _census_for_addition(add: Table) -> list[tuple[bytes, Table, Table]]:
    """Deduplicated (key, add, mul) triples for one canonical addition table."""
    n = len(add)
    auts = _addition_automorphisms(add)
    add_part = bytes(v for row in add for v in row)
    seen: dict[bytes, Table] = {}
    for mul in _multiplications(add):
        best = None
        for perm in auts:
            inv = [0] * n
            for i, p in enumerate(perm):
                inv[p] = i
            key = bytes(perm[mul[inv[a]][inv[b]]] for a in range(n) for b in range(n))
            if best is None or key < best:
                best = key
        seen.setdefault(add_part + best, mul)
    return [(key, add, mul) for key, mul in sorted(seen.items())]


def default_workers() -> int:
    """Worker count for parallel enumeration; AISEMIRING_WORKERS overrides the
    processor count."""
    env = os.environ.get("AISEMIRING_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_ai_semirings(n: int, workers: int = 1) -> CensusResult:
    """Census of all ai-semirings of order n up to isomorphism.

    Results are sorted by canonical key and named ai{n}_{i}; the outcome is
    identical for any worker count.
    """
    start = time.monotonic()
    additions = enumerate_semilattices(n)
    if workers > 1 and len(additions) > 1:
        import multiprocessing

        with multiprocessing.Pool(min(workers, len(additions))) as pool:
            chunks = pool.map(_census_for_addition, additions)
    else:
        chunks = [_census_for_addition(add) for add in additions]

    triples = sorted(item for chunk in chunks for item in chunk)
    semirings = []
    for i, (key, add, mul) in enumerate(triples):
        S = FiniteAiSemiring.from_tables(add, mul, name=f"ai{n}_{i:03d}", check=False)
        if canonical_form(S) != key:
            raise RuntimeError(f"census key mismatch for {S.name}; dedup bug")
        semirings.append(S)
    height1 = tuple(S for S in semirings if additive_height(S) == 1)
    return CensusResult(
        order=n,
        semirings=tuple(semirings),
        height1=height1,
        elapsed=time.monotonic() - start,
    )


def classify(S: FiniteAiSemiring):
    """Name of the unique catalog entry isomorphic to S, or None."""
    from . import catalog

    return catalog.classify(S)


def write_census(result: CensusResult, out_dir: str) -> str:
    """Persist a census as one JSON file per algebra plus an index of
    canonical keys; returns the index path."""
    os.makedirs(out_dir, exist_ok=True)
    lines = []
    for S in result.semirings:
        filename = f"{S.name}.json"
        with open(os.path.join(out_dir, filename), "w", encoding="utf-8") as fh:
            json.dump(S.to_dict(), fh, indent=1)
            fh.write("\n")
        lines.append(f"{canonical_form(S).hex()} {filename}")
    index_path = os.path.join(out_dir, "index.txt")
    with open(index_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return index_path
