"""Free associative unital graded algebras over GF(2).

A word is a tuple of generator names; the empty tuple is the unit.  A
polynomial is a frozenset of words: over GF(2) a word either appears with
coefficient 1 or not at all, so addition is symmetric difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Tuple, Union

Word = Tuple[str, ...]

DEFAULT_MAX_WORD_LENGTH = 64


class AlgebraError(ValueError):
    """Base class for errors raised by algebra operations."""


class UnknownGeneratorError(AlgebraError):
    def __init__(self, name: str):
        super().__init__(f"unknown generator {name}")
        self.name = name


class AlgebraMismatchError(AlgebraError):
    pass


class WordLengthError(AlgebraError):
    pass


class ExpressionSyntaxError(AlgebraError):
    """Malformed polynomial expression; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if not self.name:
            raise AlgebraError("generator name must be non-empty")


class _AnyDegree:
    """Degree of the zero polynomial: compatible with every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


@dataclass(frozen=True)
class FreeAlgebra:
    """Free graded algebra on ``generators``; degrees live in Z/modulus (Z if 0)."""

    generators: Tuple[Generator, ...]
    modulus: int = 0
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _degrees: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if self.modulus < 0:
            raise AlgebraError("grading modulus must be non-negative")
        index = {}
        for i, g in enumerate(gens):
            if g.name in index:
                raise AlgebraError(f"duplicate generator {g.name}")
            index[g.name] = i
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_degrees", {g.name: g.degree for g in gens})

    @classmethod
    def from_degrees(cls, degrees: Union[Mapping[str, int], Iterable[Tuple[str, int]]],
                     modulus: int = 0, **kwargs) -> "FreeAlgebra":
        items = degrees.items() if isinstance(degrees, Mapping) else degrees
        return cls(tuple(Generator(n, d) for n, d in items), modulus, **kwargs)

    # -- generators and grading ------------------------------------------

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self._index)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def generator_degree(self, name: str) -> int:
        try:
            return self._degrees[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def reduce_degree(self, n: int) -> int:
        return n % self.modulus if self.modulus else n

    def degree_of(self, word: Word) -> int:
        return self.reduce_degree(sum(self.generator_degree(g) for g in word))

    def word_key(self, word: Word):
        """Degree-lexicographic sort key: shorter first, then by generator index."""
        return (len(word), tuple(self.index(g) for g in word))

    def check_word(self, word: Word) -> Word:
        word = tuple(word)
        for g in word:
            if g not in self._index:
                raise UnknownGeneratorError(g)
        return word

    # -- element constructors --------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, frozenset())

    def one(self) -> "Polynomial":
        return Polynomial(self, frozenset([()]))

    def gen(self, name: str) -> "Polynomial":
        self.index(name)
        return Polynomial(self, frozenset([(name,)]))

    def word(self, *factors: str) -> "Polynomial":
        return Polynomial(self, frozenset([self.check_word(factors)]))

    def poly(self, words: Iterable[Iterable[str]]) -> "Polynomial":
        """Sum of the given words, with GF(2) cancellation of repeats."""
        terms: set = set()
        for w in words:
            terms ^= {self.check_word(w)}
        return Polynomial(self, frozenset(terms))

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __call__(self, text: str) -> "Polynomial":
        return self.parse(text)

    def words(self, max_length: int, degree=None, min_length: int = 0):
        """All words of length in [min_length, max_length] in degree-lex order,
        optionally only those of the given degree."""
        frontier = [()]
        for length in range(max_length + 1):
            if length >= min_length:
                for w in frontier:
                    if degree is None or self.degree_of(w) == self.reduce_degree(degree):
                        yield w
            if length < max_length:
                frontier = [w + (g,) for w in frontier for g in self.names]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """An element of a free algebra over GF(2); immutable."""

    algebra: FreeAlgebra
    terms: frozenset

    def _check(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatchError("polynomials belong to different algebras")
        return other

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms and (
            self.algebra is other.algebra or self.algebra == other.algebra)

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        other = self._check(other)
        return Polynomial(self.algebra, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        other = self._check(other)
        cap = self.algebra.max_word_length
        terms: set = set()
        for u in self.terms:
            for v in other.terms:
                w = u + v
                if len(w) > cap:
                    raise WordLengthError(
                        f"product word of length {len(w)} exceeds cap {cap}")
                terms ^= {w}
        return Polynomial(self.algebra, frozenset(terms))

    def __pow__(self, n: int) -> "Polynomial":
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def sorted_terms(self):
        return sorted(self.terms, key=self.algebra.word_key)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {()}

    def generators_used(self) -> set:
        return {g for w in self.terms for g in w}

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_word(word: Word) -> str:
    return " ".join(word) if word else "1"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    return " + ".join(format_word(w) for w in p.sorted_terms())


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def degree_of(algebra: FreeAlgebra, word: Word) -> int:
    return algebra.degree_of(word)


def homogeneous_degree(p: Polynomial):
    """Common degree of the terms of ``p``.

    Returns ``ANY_DEGREE`` for the zero polynomial and ``None`` if the terms
    have different degrees.
    """
    degrees = {p.algebra.degree_of(w) for w in p.terms}
    if not degrees:
        return ANY_DEGREE
    if len(degrees) > 1:
        return None
    return degrees.pop()


def is_homogeneous(p: Polynomial, degree=None) -> bool:
    d = homogeneous_degree(p)
    if d is None:
        return False
    if degree is None or d is ANY_DEGREE:
        return True
    return d == p.algebra.reduce_degree(degree)


def reverse(p: Polynomial) -> Polynomial:
    return Polynomial(p.algebra, frozenset(w[::-1] for w in p.terms))


def substitute(p: Polynomial, images: Mapping[str, Polynomial], target: FreeAlgebra) -> Polynomial:
    """Apply the algebra map sending each generator ``g`` to ``images[g]``.

    Generators missing from ``images`` are sent to themselves, which requires
    them to exist in ``target``.
    """
    cache: dict = {}

    def image(g):
        if g not in cache:
            if g in images:
                cache[g] = images[g]
            else:
                cache[g] = target.gen(g)
        return cache[g]

    result = target.zero()
    one = target.one()
    for w in p.terms:
        term = one
        for g in w:
            term = term * image(g)
            if not term:
                break
        result = result + term
    return result


# -- expression parser ----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+)|([+()*]))")


class _Parser:
    """expr := term ('+' term)* ; term := factor ('*'? factor)* ;
    factor := NAME | '0' | '1' | '(' expr ')'"""

    def __init__(self, algebra: FreeAlgebra, text: str):
        self.algebra = algebra
        self.text = text
        self.tokens = []
        pos = 0
        stripped_end = len(text.rstrip())
        while pos < stripped_end:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise ExpressionSyntaxError(f"unexpected character {text[col - 1]!r}", col)
            kind = "name" if m.group(1) else "num" if m.group(2) else m.group(3)
            value = m.group(m.lastindex)
            self.tokens.append((kind, value, m.start(m.lastindex) + 1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text) + 1)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ExpressionSyntaxError("empty expression", 1)
        p = self.expr()
        kind, value, col = self.peek()
        if kind is not None:
            raise ExpressionSyntaxError(f"unexpected {value!r}", col)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "+":
            self.take()
            p = p + self.term()
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] in ("name", "num", "(", "*"):
            if self.peek()[0] == "*":
                self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        kind, value, col = self.take()
        if kind == "name":
            if value not in self.algebra:
                err = UnknownGeneratorError(value)
                err.column = col
                raise err
            return self.algebra.gen(value)
        if kind == "num":
            if value == "0":
                return self.algebra.zero()
            if value == "1":
                return self.algebra.one()
            raise ExpressionSyntaxError(f"only 0 and 1 are coefficients, got {value}", col)
        if kind == "(":
            p = self.expr()
            kind, value, col = self.take()
            if kind != ")":
                raise ExpressionSyntaxError("expected ')'", col)
            return p
        if kind is None:
            raise ExpressionSyntaxError("unexpected end of expression", col)
        raise ExpressionSyntaxError(f"unexpected {value!r}", col)
