"""Words, terms as finite word sets, identities, parsing and word measures.

A term is a nonempty finite set of nonempty words; sum is union, product is
pairwise concatenation.  Every identity between terms reduces to a family of
"simple" identities u = u + q with q a single word.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnboundVariableError(KeyError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    """A nonempty sequence of variable identifiers."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("words must be nonempty")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    @property
    def head(self) -> str:
        return self.letters[0]

    @property
    def tail(self) -> str:
        return self.letters[-1]

    @property
    def letter_set(self) -> frozenset[str]:
        return frozenset(self.letters)

    def count(self, x: str) -> int:
        return self.letters.count(x)

    def reverse(self) -> "Word":
        return Word(self.letters[::-1])

    def sorted(self) -> "Word":
        """Commutative view: the same multiset with letters in sorted order."""
        return Word(tuple(sorted(self.letters)))

    def __str__(self) -> str:
        out = []
        for letter, run in itertools.groupby(self.letters):
            k = len(list(run))
            out.append(letter if k == 1 else f"{letter}^{k}")
        return "".join(out)


def word(text: str) -> Word:
    """Build a word from juxtaposed variables, e.g. ``word("xy^2")``."""
    t = parse_term(text)
    if len(t.words) != 1:
        raise ValueError(f"{text!r} is a sum, not a single word")
    return t.words[0]


@dataclass(frozen=True)
class Term:
    """A nonempty set of words; stored sorted with duplicates collapsed."""

    words: tuple[Word, ...]

    def __post_init__(self):
        normal = tuple(sorted(set(self.words)))
        if not normal:
            raise ValueError("terms must have at least one summand")
        object.__setattr__(self, "words", normal)

    def __add__(self, other: "Term") -> "Term":
        return Term(self.words + other.words)

    def __mul__(self, other: "Term") -> "Term":
        return Term(tuple(a * b for a in self.words for b in other.words))

    def __pow__(self, k: int) -> "Term":
        if k < 1:
            raise ValueError("exponent must be >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def __len__(self) -> int:
        return len(self.words)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset().union(*(w.letter_set for w in self.words))

    def reverse(self) -> "Term":
        return Term(tuple(w.reverse() for w in self.words))

    def __str__(self) -> str:
        return " + ".join(str(w) for w in self.words)


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> frozenset[str]:
        return self.lhs.variables | self.rhs.variables

    @property
    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def reverse(self) -> "Identity":
        return Identity(self.lhs.reverse(), self.rhs.reverse())

    def __str__(self) -> str:
        return f"{self.lhs} ≈ {self.rhs}"


@dataclass(frozen=True)
class SimpleIdentity:
    """The identity u ≈ u + q for a term u and a single extra word q."""

    base: Term
    extra: Word

    @property
    def is_trivial(self) -> bool:
        return self.extra in self.base

    def as_identity(self) -> Identity:
        return Identity(self.base, self.base + Term((self.extra,)))

    def reverse(self) -> "SimpleIdentity":
        return SimpleIdentity(self.base.reverse(), self.extra.reverse())

    def __str__(self) -> str:
        return str(self.as_identity())


def term_sum(a: Term, b: Term) -> Term:
    return a + b


def term_product(a: Term, b: Term) -> Term:
    return a * b


def substitute(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Homomorphic extension of a variable assignment to terms."""
    missing = t.variables - set(mapping)
    if missing:
        raise UnboundVariableError(f"no image for {sorted(missing)}")
    out: Optional[Term] = None
    for w in t.words:
        img: Optional[Term] = None
        for letter in w.letters:
            img = mapping[letter] if img is None else img * mapping[letter]
        out = img if out is None else out + img
    return out


# ---------------------------------------------------------------------------
# word and term measures


@dataclass(frozen=True)
class WordMeasures:
    """head/tail letter, letter set, length, per-letter counts, the word with
    its last (resp. first) letter removed, and the odd-multiplicity letters."""

    head: str
    tail: str
    letters: frozenset[str]
    length: int
    counts: Mapping[str, int]
    prefix: Optional[Word]
    suffix: Optional[Word]
    odd_letters: frozenset[str]


@lru_cache(maxsize=None)
def word_measures(w: Word) -> WordMeasures:
    counts: dict[str, int] = {}
    for x in w.letters:
        counts[x] = counts.get(x, 0) + 1
    return WordMeasures(
        head=w.head,
        tail=w.tail,
        letters=w.letter_set,
        length=len(w),
        counts=counts,
        prefix=Word(w.letters[:-1]) if len(w) > 1 else None,
        suffix=Word(w.letters[1:]) if len(w) > 1 else None,
        odd_letters=frozenset(x for x, k in counts.items() if k % 2 == 1),
    )


@dataclass(frozen=True)
class TermMeasures:
    heads: frozenset[str]
    tails: frozenset[str]
    letters: frozenset[str]
    by_length: Mapping[int, tuple[Word, ...]]

    def of_length(self, k: int) -> tuple[Word, ...]:
        return self.by_length.get(k, ())


@lru_cache(maxsize=None)
def term_measures(u: Term) -> TermMeasures:
    by_length: dict[int, list[Word]] = {}
    for w in u.words:
        by_length.setdefault(len(w), []).append(w)
    return TermMeasures(
        heads=frozenset(w.head for w in u.words),
        tails=frozenset(w.tail for w in u.words),
        letters=u.variables,
        by_length={k: tuple(v) for k, v in by_length.items()},
    )


def normalize_identity(identity: Identity) -> tuple[SimpleIdentity, ...]:
    """Split u ≈ v into the equivalent family u ≈ u+v_j, v ≈ v+u_i.

    Members whose extra word already occurs in the base are trivial; they are
    kept and can be recognised via ``SimpleIdentity.is_trivial``.
    """
    u, v = identity.lhs, identity.rhs
    out = [SimpleIdentity(u, w) for w in v.words]
    out.extend(SimpleIdentity(v, w) for w in u.words)
    return tuple(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"(?P<var>[A-Za-z][0-9]*)|(?P<num>[0-9]+)|(?P<op>[+*^()=])|(?P<approx>≈)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def term(self) -> Term:
        out = self.product()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "+":
                self.take()
                out = out + self.product()
            else:
                return out

    def product(self) -> Term:
        out = None
        while True:
            kind, value, pos = self.peek()
            if kind == "var" or (kind == "op" and value == "("):
                factor = self.factor()
                out = factor if out is None else out * factor
            elif kind == "op" and value == "*":
                if out is None:
                    raise TermSyntaxError("'*' needs a left factor", pos)
                self.take()
            else:
                if out is None:
                    raise TermSyntaxError("expected a variable or '('", pos)
                return out

    def factor(self) -> Term:
        kind, value, pos = self.take()
        if kind == "var":
            base = Term((Word((value,)),))
        elif kind == "op" and value == "(":
            base = self.term()
            kind, value, pos = self.take()
            if not (kind == "op" and value == ")"):
                raise TermSyntaxError("expected ')'", pos)
        else:
            raise TermSyntaxError("expected a variable or '('", pos)
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "^":
                self.take()
                kind, value, pos = self.take()
                if kind != "num":
                    raise TermSyntaxError("expected digits after '^'", pos)
                k = int(value)
                if k < 1:
                    raise TermSyntaxError("exponent would make an empty word", pos)
                base = base ** k
            else:
                return base


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    kind, _, pos = p.peek()
    if kind != "end":
        raise TermSyntaxError("trailing input after term", pos)
    return t


def parse_identity(text: str) -> Identity:
    p = _Parser(text)
    lhs = p.term()
    kind, value, pos = p.take()
    if not (kind == "approx" or (kind == "op" and value == "=")):
        raise TermSyntaxError("expected '≈' or '=' between the two sides", pos)
    rhs = p.term()
    kind, _, pos = p.peek()
    if kind != "end":
        raise TermSyntaxError("trailing input after identity", pos)
    return Identity(lhs, rhs)
