"""Semantic identity satisfaction by exhaustive evaluation.

Satisfaction is exact: every assignment of elements to variables is tried,
up to a hard assignment budget.  Witnesses are always the lexicographically
first failing assignment (variables sorted by name, element indices ascending),
so results are deterministic and schedule-independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .core import FiniteAiSemiring
from .terms import Identity, Term, Word

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The assignment space is larger than the exhaustive-evaluation budget."""


class UnassignedVariableError(KeyError):
    pass


def eval_word(S: FiniteAiSemiring, w: Word, assignment: Mapping[str, int]) -> int:
    try:
        acc = assignment[w.letters[0]]
        for x in w.letters[1:]:
            acc = S.mul[acc][assignment[x]]
    except KeyError as exc:
        raise UnassignedVariableError(f"variable {exc.args[0]!r} has no value") from None
    return acc


def eval_term(S: FiniteAiSemiring, t: Term, assignment: Mapping[str, int]) -> int:
    acc = eval_word(S, t.words[0], assignment)
    for w in t.words[1:]:
        acc = S.add[acc][eval_word(S, w, assignment)]
    return acc


def _assignments(variables: Sequence[str], n: int, budget: int):
    total = n ** len(variables)
    if total > budget:
        raise BudgetExceededError(
            f"{total} assignments exceed the budget of {budget}; refusing to sample"
        )
    for values in itertools.product(range(n), repeat=len(variables)):
        yield dict(zip(variables, values))


def counterexample(
    S: FiniteAiSemiring, identity: Identity, budget: int = DEFAULT_BUDGET
) -> Optional[dict[str, int]]:
    """Lexicographically first failing assignment, or None if the identity holds."""
    variables = sorted(identity.variables)
    for assignment in _assignments(variables, S.order, budget):
        if eval_term(S, identity.lhs, assignment) != eval_term(S, identity.rhs, assignment):
            return assignment
    return None


def satisfies(S: FiniteAiSemiring, identity: Identity, budget: int = DEFAULT_BUDGET) -> bool:
    return counterexample(S, identity, budget) is None


@dataclass(frozen=True)
class IdentityVerdict:
    identity: Identity
    holds: bool
    witness: Optional[dict[str, int]]

    def to_dict(self, S: Optional[FiniteAiSemiring] = None) -> dict:
        witness = None
        if self.witness is not None:
            witness = {
                x: (S.elements[v] if S is not None else v) for x, v in self.witness.items()
            }
        return {"identity": str(self.identity), "holds": self.holds, "witness": witness}


@dataclass(frozen=True)
class BasisReport:
    verdicts: tuple[IdentityVerdict, ...]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)


def check_basis(
    S: FiniteAiSemiring, identities: Iterable[Identity], budget: int = DEFAULT_BUDGET
) -> BasisReport:
    verdicts = []
    for identity in identities:
        witness = counterexample(S, identity, budget)
        verdicts.append(IdentityVerdict(identity, witness is None, witness))
    return BasisReport(tuple(verdicts))


class BulkEvaluator:
    """Evaluate many words of a fixed variable pool over all assignments at once.

    Each word maps to the tuple of its values across all n**k assignments in
    lexicographic order; results are memoized per word.  Semantically identical
    to eval_word under every assignment, just batched.
    """

    def __init__(self, S: FiniteAiSemiring, variables: Sequence[str]):
        self.S = S
        self.variables = tuple(variables)
        n = S.order
        k = len(self.variables)
        self._columns = {}
        for i, x in enumerate(self.variables):
            period = n ** (k - i - 1)
            column = []
            for v in range(n):
                column.extend([v] * period)
            self._columns[x] = tuple(column * (n ** i))
        self._cache: dict[Word, tuple[int, ...]] = {}

    def word_vector(self, w: Word) -> tuple[int, ...]:
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        mul = self.S.mul
        acc = self._columns[w.letters[0]]
        for x in w.letters[1:]:
            col = self._columns[x]
            acc = tuple(mul[a][b] for a, b in zip(acc, col))
        self._cache[w] = acc
        return acc

    def term_vector(self, t: Term) -> tuple[int, ...]:
        add = self.S.add
        acc = self.word_vector(t.words[0])
        for w in t.words[1:]:
            acc = tuple(add[a][b] for a, b in zip(acc, self.word_vector(w)))
        return acc

    def absorbs(self, base: tuple[int, ...], extra: tuple[int, ...]) -> bool:
        """True iff base + extra == base pointwise, i.e. u ≈ u + q holds."""
        add = self.S.add
        return all(add[a][b] == a for a, b in zip(base, extra))

    def simple_identity_holds(self, base: tuple[int, ...], q: Word) -> bool:
        return self.absorbs(base, self.word_vector(q))
