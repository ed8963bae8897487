"""Finite additively idempotent semirings: tables, validation, order, maps.

Elements are 0-indexed internally; ``elements`` holds display names.  All
values are immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

Row = tuple[int, ...]
Table = tuple[Row, ...]


class MalformedTableError(ValueError):
    """Table has wrong shape or an out-of-range entry (not a law violation)."""


class InvalidSemiringError(ValueError):
    """Tables are well-formed but violate a semiring law."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        laws = ", ".join(law for law, _ in report.violations)
        super().__init__(f"not an ai-semiring: {laws}")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a law check; at most one witness is kept per law."""

    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]


def _as_table(rows: Sequence[Sequence[int]], n: int, what: str) -> Table:
    if len(rows) != n:
        raise MalformedTableError(f"{what} table must have {n} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        row = tuple(row)
        if len(row) != n:
            raise MalformedTableError(f"{what} row {i} must have {n} entries, got {len(row)}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTableError(f"{what}[{i}] entry {v!r} out of range 0..{n - 1}")
        out.append(row)
    return tuple(out)


def validate(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> ValidationReport:
    """Check the ai-semiring laws, reporting the first witness per violated law.

    Malformed input (shape or range) raises ``MalformedTableError`` instead of
    being reported as a law violation.
    """
    n = len(add)
    if n == 0:
        raise MalformedTableError("empty table")
    add = _as_table(add, n, "add")
    mul = _as_table(mul, n, "mul")

    violations = []
    rng = range(n)

    for a in rng:
        if add[a][a] != a:
            violations.append(("add-idempotence", (a,)))
            break
    for a, b in itertools.product(rng, rng):
        if add[a][b] != add[b][a]:
            violations.append(("add-commutativity", (a, b)))
            break
    for a, b, c in itertools.product(rng, rng, rng):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            violations.append(("add-associativity", (a, b, c)))
            break
    for a, b, c in itertools.product(rng, rng, rng):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            violations.append(("mul-associativity", (a, b, c)))
            break
    for a, b, c in itertools.product(rng, rng, rng):
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            violations.append(("left-distributivity", (a, b, c)))
            break
    for a, b, c in itertools.product(rng, rng, rng):
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            violations.append(("right-distributivity", (a, b, c)))
            break

    return ValidationReport(valid=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class FiniteAiSemiring:
    """An additively idempotent semiring given by its Cayley tables."""

    name: str
    elements: tuple[str, ...]
    add: Table
    mul: Table

    @property
    def order(self) -> int:
        return len(self.elements)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def index_of(self, element_name: str) -> int:
        return self.elements.index(element_name)

    @classmethod
    def from_tables(
        cls,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        elements: Optional[Sequence[str]] = None,
        name: str = "",
        check: bool = True,
    ) -> "FiniteAiSemiring":
        n = len(add)
        if check:
            report = validate(add, mul)
            if not report.valid:
                raise InvalidSemiringError(report)
        else:
            add = _as_table(add, n, "add")
            mul = _as_table(mul, n, "mul")
        if elements is None:
            elements = tuple(str(i + 1) for i in range(n))
        else:
            elements = tuple(elements)
            if len(elements) != n or len(set(elements)) != n:
                raise MalformedTableError("element names must be distinct, one per row")
        return cls(name=name, elements=elements, add=tuple(map(tuple, add)), mul=tuple(map(tuple, mul)))

    def renamed(self, name: str) -> "FiniteAiSemiring":
        return replace(self, name=name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "elements": list(self.elements),
            "add": [list(r) for r in self.add],
            "mul": [list(r) for r in self.mul],
        }

    @classmethod
    def from_dict(cls, data: dict, check: bool = True) -> "FiniteAiSemiring":
        return cls.from_tables(
            data["add"], data["mul"], elements=data.get("elements"), name=data.get("name", ""), check=check
        )

    def __repr__(self) -> str:
        return f"FiniteAiSemiring({self.name or '?'}, order={self.order})"


@dataclass(frozen=True)
class NaturalOrder:
    """The partial order a <= b iff a+b = b, together with its top."""

    leq: tuple[tuple[bool, ...], ...]
    top: int

    def below(self, a: int) -> tuple[int, ...]:
        return tuple(b for b in range(len(self.leq)) if self.leq[b][a])


def natural_order(S: FiniteAiSemiring) -> NaturalOrder:
    """Compute the natural order of a valid semiring and verify compatibility."""
    n = S.order
    leq = tuple(tuple(S.add[a][b] == b for b in range(n)) for a in range(n))
    for a in range(n):
        if not leq[a][a]:
            raise InvalidSemiringError(ValidationReport(False, (("add-idempotence", (a,)),)))
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise InvalidSemiringError(ValidationReport(False, (("add-commutativity", (a, b)),)))
    tops = [b for b in range(n) if all(leq[a][b] for a in range(n))]
    if len(tops) != 1:
        raise InvalidSemiringError(ValidationReport(False, (("add-associativity", ()),)))
    # compatibility with both operations; a theorem for valid tables, checked anyway
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][b]:
            if not leq[S.add[a][c]][S.add[b][c]]:
                raise InvalidSemiringError(ValidationReport(False, (("add-associativity", (a, b, c)),)))
            if not (leq[S.mul[a][c]][S.mul[b][c]] and leq[S.mul[c][a]][S.mul[c][b]]):
                raise InvalidSemiringError(ValidationReport(False, (("left-distributivity", (a, b, c)),)))
    return NaturalOrder(leq=leq, top=tops[0])


def additive_height(S: FiniteAiSemiring) -> int:
    """Length in edges of the longest chain of the natural order."""
    order = natural_order(S)
    n = S.order
    below_counts = sorted(range(n), key=lambda x: sum(order.leq[y][x] for y in range(n)))
    height = {x: 0 for x in range(n)}
    for x in below_counts:
        for y in range(n):
            if y != x and order.leq[y][x]:
                height[x] = max(height[x], height[y] + 1)
    return max(height.values())


def dual(S: FiniteAiSemiring) -> FiniteAiSemiring:
    """Same addition, opposite multiplication."""
    n = S.order
    mul = tuple(tuple(S.mul[b][a] for b in range(n)) for a in range(n))
    return FiniteAiSemiring(name=f"dual({S.name})" if S.name else "", elements=S.elements, add=S.add, mul=mul)


def direct_product(S: FiniteAiSemiring, T: FiniteAiSemiring) -> FiniteAiSemiring:
    """Componentwise product on pairs, row-major pair indexing."""
    n, m = S.order, T.order

    def pair(i: int, j: int) -> int:
        return i * m + j

    elements = tuple(f"({a},{b})" for a in S.elements for b in T.elements)
    add = [[0] * (n * m) for _ in range(n * m)]
    mul = [[0] * (n * m) for _ in range(n * m)]
    for i1, j1 in itertools.product(range(n), range(m)):
        for i2, j2 in itertools.product(range(n), range(m)):
            add[pair(i1, j1)][pair(i2, j2)] = pair(S.add[i1][i2], T.add[j1][j2])
            mul[pair(i1, j1)][pair(i2, j2)] = pair(S.mul[i1][i2], T.mul[j1][j2])
    name = f"{S.name}x{T.name}" if S.name and T.name else ""
    return FiniteAiSemiring(name=name, elements=elements, add=tuple(map(tuple, add)), mul=tuple(map(tuple, mul)))


@dataclass(frozen=True)
class Morphism:
    """A total map between carriers that preserves both operations."""

    source: FiniteAiSemiring
    target: FiniteAiSemiring
    mapping: tuple[int, ...]

    def __post_init__(self):
        S, T, f = self.source, self.target, self.mapping
        if len(f) != S.order:
            raise ValueError("mapping must assign every source element")
        for a, b in itertools.product(range(S.order), repeat=2):
            if f[S.add[a][b]] != T.add[f[a]][f[b]] or f[S.mul[a][b]] != T.mul[f[a]][f[b]]:
                raise ValueError(f"not a homomorphism at ({a},{b})")

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def bijective(self) -> bool:
        return self.injective and len(self.mapping) == self.target.order

    def to_dict(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "map": {self.source.elements[a]: self.target.elements[b] for a, b in enumerate(self.mapping)},
        }


def generated_subalgebra(S: FiniteAiSemiring, seed: Iterable[int]) -> tuple[FiniteAiSemiring, Morphism]:
    """Closure of ``seed`` under + and *, with induced tables and inclusion map."""
    carrier = set(seed)
    if not carrier:
        raise ValueError("seed must be nonempty")
    if not all(0 <= x < S.order for x in carrier):
        raise ValueError("seed elements out of range")
    frontier = list(carrier)
    while frontier:
        new = []
        for a in list(carrier):
            for b in frontier:
                for v in (S.add[a][b], S.mul[a][b], S.mul[b][a]):
                    if v not in carrier:
                        carrier.add(v)
                        new.append(v)
        frontier = new
    included = tuple(sorted(carrier))
    pos = {x: i for i, x in enumerate(included)}
    add = tuple(tuple(pos[S.add[a][b]] for b in included) for a in included)
    mul = tuple(tuple(pos[S.mul[a][b]] for b in included) for a in included)
    sub = FiniteAiSemiring(
        name=f"{S.name}|{{{','.join(S.elements[x] for x in included)}}}" if S.name else "",
        elements=tuple(S.elements[x] for x in included),
        add=add,
        mul=mul,
    )
    return sub, Morphism(source=sub, target=S, mapping=included)


_MAX_CANONICAL_ORDER = 8


def canonical_form(S: FiniteAiSemiring) -> bytes:
    """Lexicographic minimum over all carrier permutations of add then mul.

    Equal keys characterise isomorphism.  Brute force is fine at the target
    sizes (n <= 8).
    """
    n = S.order
    if n > _MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical_form supports order <= {_MAX_CANONICAL_ORDER}")
    add, mul = S.add, S.mul
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        key = bytes(
            perm[t[inv[a]][inv[b]]] for t in (add, mul) for a in range(n) for b in range(n)
        )
        if best is None or key < best:
            best = key
    return best


def canonical_key_hex(S: FiniteAiSemiring) -> str:
    return canonical_form(S).hex()


def _search_hom(
    S: FiniteAiSemiring,
    T: FiniteAiSemiring,
    injective: bool,
    accept=None,
) -> Optional[tuple[int, ...]]:
    """First homomorphism S -> T in lexicographic image order, or None.

    Backtracking assigns images in source-index order; partial images are
    pruned as soon as an operation constraint is decided.
    """
    n, m = S.order, T.order
    img = [-1] * n
    used = [False] * m

    def consistent(upto: int) -> bool:
        for a in range(upto + 1):
            for b in range(upto + 1):
                for sop, top in ((S.add, T.add), (S.mul, T.mul)):
                    k = sop[a][b]
                    if k <= upto or img[k] >= 0:
                        if top[img[a]][img[b]] != img[k]:
                            return False
        return True

    def extend(i: int) -> Optional[tuple[int, ...]]:
        if i == n:
            result = tuple(img)
            if accept is None or accept(result):
                return result
            return None
        for t in range(m):
            if injective and used[t]:
                continue
            img[i] = t
            used[t] = True
            if consistent(i):
                found = extend(i + 1)
                if found is not None:
                    return found
            img[i] = -1
            used[t] = False
        return None

    return extend(0)


def find_isomorphism(S: FiniteAiSemiring, T: FiniteAiSemiring) -> Optional[Morphism]:
    """A bijective homomorphism if one exists; first in lexicographic order."""
    if S.order != T.order:
        return None
    found = _search_hom(S, T, injective=True)
    if found is None:
        return None
    return Morphism(source=S, target=T, mapping=found)


def find_embedding(S: FiniteAiSemiring, T: FiniteAiSemiring) -> Optional[Morphism]:
    """An injective homomorphism S -> T if one exists; deterministic."""
    if S.order > T.order:
        return None
    found = _search_hom(S, T, injective=True)
    if found is None:
        return None
    return Morphism(source=S, target=T, mapping=found)


def is_subdirect_embedding(
    S: FiniteAiSemiring, A: FiniteAiSemiring, B: FiniteAiSemiring
) -> Optional[Morphism]:
    """An injective hom S -> A x B with both coordinate projections onto."""
    P = direct_product(A, B)
    if S.order > P.order:
        return None
    m = B.order

    def surjective(mapping: tuple[int, ...]) -> bool:
        return len({p // m for p in mapping}) == A.order and len({p % m for p in mapping}) == B.order

    found = _search_hom(S, P, injective=True, accept=surjective)
    if found is None:
        return None
    return Morphism(source=S, target=P, mapping=found)
