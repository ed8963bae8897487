import itertools
import random

import pytest

from aisemiring import catalog, criteria
from aisemiring.evaluate import satisfies
from aisemiring.terms import SimpleIdentity, Term, Word, parse_term, word


def si(u_text, q_text):
    return SimpleIdentity(parse_term(u_text), word(q_text))


def test_two_element_clauses():
    assert criteria.holds_two_element("L2", si("xy + z", "xw")).holds
    assert not criteria.holds_two_element("L2", si("xy", "wx")).holds
    assert criteria.holds_two_element("R2", si("xy", "zy")).holds
    assert criteria.holds_two_element("M2", si("xy", "x")).holds
    assert not criteria.holds_two_element("M2", si("xy", "w")).holds
    assert criteria.holds_two_element("D2", si("xy + z", "zw")).holds
    assert criteria.holds_two_element("N2", si("x", "yz")).holds
    assert not criteria.holds_two_element("N2", si("x", "y")).holds
    assert criteria.holds_two_element("T2", si("xy + z", "w")).holds
    assert not criteria.holds_two_element("T2", si("x + y", "z")).holds
    with pytest.raises(ValueError):
        criteria.holds_two_element("Q2", si("x", "x"))


def test_s2_clauses():
    assert criteria.holds_s2(si("xyz", "w")).rule == "long-summand"
    assert criteria.holds_s2(si("x + xy", "w")).rule == "length-mix-overlap"
    assert not criteria.holds_s2(si("xy + z", "w")).holds
    assert criteria.holds_s2(si("xy + z", "z")).holds
    assert criteria.holds_s2(si("xy + zw", "xz")).holds
    assert not criteria.holds_s2(si("xy", "xyy")).holds


def test_property_t_and_h():
    assert criteria.property_t(parse_term("xy"))
    assert criteria.property_t(parse_term("xy + zxw"))
    assert not criteria.property_t(parse_term("x^2"))
    assert criteria.property_h(parse_term("yx + wxz"))
    assert not criteria.property_h(parse_term("x^2"))


def test_delta_family():
    d = criteria.delta(parse_term("xy + zy"))
    assert {"y"} in d and {"x", "z"} in d
    assert len(criteria.delta(parse_term("x^2"))) == 0
    assert set(criteria.delta(parse_term("x"))) == {frozenset({"x"})}


def test_delta_characterises_property_t():
    words = [Word(t) for k in (1, 2, 3) for t in itertools.product("xy", repeat=k)]
    for r in (1, 2):
        for combo in itertools.combinations(words, r):
            v = Term(combo)
            tails = frozenset(w.tail for w in v.words)
            assert (tails in criteria.delta(v)) == criteria.property_t(v)


def test_s4_examples():
    assert criteria.holds_s4(si("xy + x", "xxx")).holds
    assert not criteria.holds_s4(si("xy", "x")).holds
    assert criteria.holds_s4(si("xy", "y")).holds
    assert criteria.holds_s4(si("x + xy", "xy")).rule == "trivial"
    assert not criteria.holds_s4(si("xy", "w")).holds
    assert not criteria.holds_s4(si("x + y", "y^2")).holds


def test_s6_is_the_reverse_of_s4():
    rng = random.Random(11)
    pool = ["x", "y", "z"]
    for _ in range(300):
        u = Term(
            tuple(
                Word(tuple(rng.choice(pool) for _ in range(rng.randint(1, 3))))
                for _ in range(rng.randint(1, 3))
            )
        )
        q = Word(tuple(rng.choice(pool) for _ in range(rng.randint(1, 3))))
        s = SimpleIdentity(u, q)
        assert criteria.holds_s6(s).holds == criteria.holds_s4(s.reverse()).holds


def test_s10_examples():
    assert criteria.holds_s10(si("xy^2", "x")).holds
    assert criteria.holds_s10(si("xy", "yx")).holds
    assert not criteria.holds_s10(si("x^2", "x")).holds
    # odd products combine three distinct summands
    assert criteria.holds_s10(si("x + y + z", "xyz")).holds
    assert not criteria.holds_s10(si("x + y", "xy")).holds


def test_dispatch():
    verdict = criteria.check("s10", si("xy", "yx"))
    assert verdict.holds and verdict.rule == "odd-set-match"
    with pytest.raises(ValueError):
        criteria.check("nope", si("x", "x"))


def test_random_oracle_agreement():
    rng = random.Random(99)
    pool = ["x", "y", "z"]
    oracles = {name: catalog.get(name).semiring for name in criteria.CRITERIA}
    for _ in range(500):
        u = Term(
            tuple(
                Word(tuple(rng.choice(pool) for _ in range(rng.randint(1, 3))))
                for _ in range(rng.randint(1, 3))
            )
        )
        q = Word(tuple(rng.choice(pool) for _ in range(rng.randint(1, 3))))
        s = SimpleIdentity(u, q)
        name = rng.choice(sorted(criteria.CRITERIA))
        assert (
            criteria.check(name, s).holds == satisfies(oracles[name], s.as_identity())
        ), (name, str(s))
