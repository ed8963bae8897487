import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aisemiring import catalog
from aisemiring.core import FiniteAiSemiring, direct_product, dual, find_embedding
from aisemiring.evaluate import (
    BudgetExceededError,
    BulkEvaluator,
    UnassignedVariableError,
    check_basis,
    counterexample,
    eval_term,
    satisfies,
)
from aisemiring.terms import normalize_identity, parse_identity, parse_term


def S(name):
    return catalog.get(name).semiring


def test_eval_term_examples():
    s44 = S("S_(4,4)")
    t = parse_term("xy")
    # elements "1".."4" sit at indices 0..3
    assert eval_term(s44, t, {"x": 2, "y": 3}) == 1  # 3*4 = 2
    assert eval_term(s44, parse_term("x"), {"x": 3}) == 3
    s7 = S("S7")
    assert eval_term(s7, t, {"x": 0, "y": 1}) == 1  # 1*a = a
    with pytest.raises(UnassignedVariableError):
        eval_term(s44, t, {"x": 0})


def test_satisfies_examples():
    assert satisfies(S("S_(4,20)"), parse_identity("x^4 ≈ x^2"))
    assert satisfies(S("S_(4,1)"), parse_identity("x ≈ x"))
    assert not satisfies(S("S_(4,4)"), parse_identity("xy ≈ yx"))


def test_counterexample_is_lexicographically_first():
    s44 = S("S_(4,4)")
    witness = counterexample(s44, parse_identity("xy ≈ yx"))
    assert witness == {"x": 2, "y": 3}
    assert counterexample(s44, parse_identity("x ≈ x")) is None
    t2 = S("T2")
    assert counterexample(t2, parse_identity("x ≈ x^2")) == {"x": 0}
    assert not satisfies(S("S_(4,1)"), parse_identity("x ≈ y"))


def test_budget_is_exact_never_sampled():
    s = S("S_(4,1)")
    # 12 variables exceed the default 1e7 budget on 4 elements; the identity
    # holds because every product lands on the top
    big = parse_identity("x1x2x3x4x5x6x7x8x9x10x11x12 ≈ x12x11x10x9x8x7x6x5x4x3x2x1")
    with pytest.raises(BudgetExceededError):
        satisfies(s, big)
    assert satisfies(s, big, budget=4**12)


def test_check_basis_reports_witnesses():
    report = check_basis(S("S_(4,1)"), [parse_identity("x ≈ y"), parse_identity("x ≈ x")])
    assert not report.all_hold
    failed = report.verdicts[0]
    assert failed.witness == {"x": 0, "y": 1}
    assert report.verdicts[1].holds


WORDS = [
    "x", "y", "xx", "xy", "yx", "xyx", "xxy", "yyx", "xyy",
]


def _random_identity(rng):
    lhs = " + ".join(rng.sample(WORDS, rng.randint(1, 3)))
    rhs = " + ".join(rng.sample(WORDS, rng.randint(1, 3)))
    return parse_identity(f"{lhs} ≈ {rhs}")


def test_isomorphism_invariance_on_catalog_pairs():
    rng = random.Random(1)
    pairs = [("S_(4,16)", "@dual:S_(4,41)"), ("S_(4,8)", "@sc:ab"), ("S7", "@mc:a")]
    for name, ref in pairs:
        A = S(name)
        B = catalog.resolve(ref)
        for _ in range(20):
            identity = _random_identity(rng)
            assert satisfies(A, identity) == satisfies(B, identity)


def test_duality_reverses_words():
    rng = random.Random(2)
    for name in ("S_(4,30)", "S_(4,47)", "S_(4,12)", "S4"):
        A = S(name)
        D = dual(A)
        for _ in range(25):
            identity = _random_identity(rng)
            assert satisfies(D, identity) == satisfies(A, identity.reverse())


def test_subalgebra_monotonicity():
    rng = random.Random(3)
    big = S("S_(4,20)")
    small = S("S10")
    assert find_embedding(small, big) is not None
    for _ in range(40):
        identity = _random_identity(rng)
        if satisfies(big, identity):
            assert satisfies(small, identity)


def test_product_satisfaction_is_componentwise():
    rng = random.Random(4)
    A, B = S("S2"), S("T2")
    P = direct_product(A, B)
    for _ in range(40):
        identity = _random_identity(rng)
        assert satisfies(P, identity) == (satisfies(A, identity) and satisfies(B, identity))


def test_normalize_identity_preserves_satisfaction():
    rng = random.Random(5)
    for name in ("S_(4,4)", "S2", "T2", "S_(4,37)"):
        algebra = S(name)
        for _ in range(25):
            identity = _random_identity(rng)
            members = normalize_identity(identity)
            assert satisfies(algebra, identity) == all(
                satisfies(algebra, m.as_identity()) for m in members
            )


def test_bulk_evaluator_matches_satisfies():
    rng = random.Random(6)
    for name in ("S2", "S4", "L2", "T2", "S10"):
        algebra = S(name)
        bulk = BulkEvaluator(algebra, ("x", "y", "z"))
        for _ in range(60):
            u = parse_term(" + ".join(rng.sample(WORDS, rng.randint(1, 3))))
            q = parse_term(rng.choice(WORDS)).words[0]
            expected = satisfies(
                algebra, parse_identity(f"{u} ≈ {u} + {q}")
            )
            assert bulk.simple_identity_holds(bulk.term_vector(u), q) == expected
