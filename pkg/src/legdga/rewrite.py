"""Normal forms in quotients of free algebras by two-sided ideals.

Relations are oriented into rules ``word -> polynomial``; a rule rewrites
any occurrence of its left side inside a word.  Confluence is checked on
critical pairs and, as a bounded brute-force cross-check, over all words
up to a given length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    AlgebraError,
    FreeAlgebra,
    Polynomial,
    Word,
    format_word,
    homogeneous_degree,
)

DEFAULT_MAX_STEPS = 10_000


class RewriteError(AlgebraError):
    pass


class RewriteBudgetExceeded(RewriteError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        if not self.lhs:
            raise RewriteError("rule left-hand side must be a non-empty word")
        A = self.rhs.algebra
        A.check_word(self.lhs)
        d = homogeneous_degree(self.rhs)
        if d is None:
            raise RewriteError(f"rule right-hand side {self.rhs} is not homogeneous")
        if d != A.degree_of(self.lhs) and self.rhs:
            raise RewriteError(
                f"rule {format_word(self.lhs)} -> {self.rhs} does not preserve degree")

    def __str__(self):
        return f"{format_word(self.lhs)} -> {self.rhs}"


def find(word: Word, sub: Word, start: int = 0) -> int:
    n = len(sub)
    for i in range(start, len(word) - n + 1):
        if word[i:i + n] == sub:
            return i
    return -1


def orient(relation: Polynomial) -> RewriteRule:
    """Turn a relation ``r`` into ``w -> r + w`` with ``w`` its leading word:
    the longest term, ties broken by the largest in degree-lex order."""
    if not relation:
        raise RewriteError("cannot orient the zero relation")
    lead = max(relation.terms, key=relation.algebra.word_key)
    if not lead:
        raise RewriteError("relation has constant leading word; the ideal is everything")
    return RewriteRule(lead, relation + relation.algebra.word(*lead))


@dataclass(frozen=True, eq=False)
class RewriteSystem:
    algebra: FreeAlgebra
    rules: Tuple[RewriteRule, ...] = ()
    max_steps: int = DEFAULT_MAX_STEPS
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.max_steps <= 0:
            raise RewriteError("max_steps must be positive")
        seen = set()
        for r in self.rules:
            if r.rhs.algebra != self.algebra:
                raise RewriteError(f"rule {r} lies in a different algebra")
            if r.lhs in seen:
                raise RewriteError(f"duplicate rule left side {format_word(r.lhs)}")
            seen.add(r.lhs)

    @classmethod
    def from_relations(cls, algebra: FreeAlgebra, relations: Iterable[Polynomial],
                       max_steps: int = DEFAULT_MAX_STEPS) -> "RewriteSystem":
        rules = []
        for r in relations:
            if r:
                rule = orient(r)
                if all(rule.lhs != s.lhs for s in rules):
                    rules.append(rule)
        return cls(algebra, tuple(rules), max_steps)

    def __str__(self):
        return "\n".join(f"rule: {r}" for r in self.rules)

    # -- single steps ----------------------------------------------------

    def redexes(self, word: Word):
        """Every ``(rule, position)`` at which ``word`` can be rewritten."""
        for rule in self.rules:
            i = find(word, rule.lhs)
            while i >= 0:
                yield rule, i
                i = find(word, rule.lhs, i + 1)

    def rewrite_at(self, word: Word, rule: RewriteRule, pos: int) -> Polynomial:
        left, right = word[:pos], word[pos + len(rule.lhs):]
        return Polynomial(self.algebra, frozenset(left + v + right for v in rule.rhs.terms))

    def is_irreducible(self, word: Word) -> bool:
        return all(find(word, r.lhs) < 0 for r in self.rules)

    def reduce_once(self, p: Polynomial) -> Optional[Polynomial]:
        """One rewrite step, or None if ``p`` is already irreducible.

        Picks the first rule that applies; among its occurrences the leftmost
        position wins, then the earliest term in degree-lex order.
        """
        terms = p.sorted_terms()
        for rule in self.rules:
            best = None
            for k, w in enumerate(terms):
                i = find(w, rule.lhs)
                if i >= 0 and (best is None or i < best[0]):
                    best = (i, k)
            if best is not None:
                i, k = best
                w = terms[k]
                return p + Polynomial(self.algebra, frozenset([w])) + self.rewrite_at(w, rule, i)
        return None

    # -- normal forms ----------------------------------------------------

    def normal_form(self, p: Polynomial, max_steps: Optional[int] = None) -> Polynomial:
        """Irreducible representative of ``p``; raises if the step budget runs out."""
        budget = [self.max_steps if max_steps is None else max_steps]
        result: set = set()
        try:
            for w in p.terms:
                result ^= self._word_nf(w, budget)
        except RecursionError:
            raise RewriteBudgetExceeded(f"normal form of {p} does not terminate") from None
        return Polynomial(self.algebra, frozenset(result))

    def _word_nf(self, word: Word, budget: list) -> frozenset:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        for rule in self.rules:
            i = find(word, rule.lhs)
            if i >= 0:
                budget[0] -= 1
                if budget[0] < 0:
                    raise RewriteBudgetExceeded(
                        f"normal form of {format_word(word)} exceeded {self.max_steps} steps")
                out: set = set()
                for w in self.rewrite_at(word, rule, i).terms:
                    out ^= self._word_nf(w, budget)
                nf = frozenset(out)
                break
        else:
            nf = frozenset([word])
        self._cache[word] = nf
        return nf

    def all_normal_forms(self, p: Polynomial, max_states: int = 100_000) -> set:
        """Every irreducible polynomial reachable from ``p`` by any sequence of
        single-term, single-position rewrites."""
        start = p.terms
        seen = {start}
        stack = [start]
        found = set()
        while stack:
            terms = stack.pop()
            succs = []
            for w in terms:
                for rule, i in self.redexes(w):
                    nxt = terms ^ {w} ^ self.rewrite_at(w, rule, i).terms
                    succs.append(frozenset(nxt))
            if not succs:
                found.add(Polynomial(self.algebra, terms))
            for s in succs:
                if s not in seen:
                    seen.add(s)
                    if len(seen) > max_states:
                        raise RewriteBudgetExceeded(
                            f"more than {max_states} reachable states from {p}")
                    stack.append(s)
        return found


def ideal_images(projection, dga) -> List[Polynomial]:
    """Distinct nonzero images of the generator differentials of ``dga``."""
    out: List[Polynomial] = []
    for g in dga.algebra.names:
        img = projection.project(dga[g])
        if img and img not in out:
            out.append(img)
    return out


def reduce_once(sys: RewriteSystem, p: Polynomial) -> Optional[Polynomial]:
    return sys.reduce_once(p)


def normal_form(sys: RewriteSystem, p: Polynomial) -> Polynomial:
    return sys.normal_form(p)


# -- confluence -------------------------------------------------------------

@dataclass(frozen=True)
class CriticalPair:
    word: Word
    first: Tuple[int, int]   # (rule index, position)
    second: Tuple[int, int]
    left: Polynomial
    right: Polynomial

    @property
    def joinable(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class ConfluenceReport:
    confluent: bool
    critical_pairs: Tuple[CriticalPair, ...]
    max_word_length: int
    words_checked: int
    divergences: Tuple[str, ...] = ()

    def __bool__(self):
        return self.confluent


def critical_words(rules: Sequence[RewriteRule]):
    """Overlap and inclusion words between rule left sides.

    Yields ``(word, (i, pos_i), (j, pos_j))`` where rule ``i`` applies at
    ``pos_i`` and rule ``j`` at ``pos_j`` of ``word``.
    """
    for i, r in enumerate(rules):
        for j, s in enumerate(rules):
            a, b = r.lhs, s.lhs
            # proper overlap: a suffix of a equals a prefix of b
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k:] == b[:k]:
                    yield a + b[k:], (i, 0), (j, len(a) - k)
            # inclusion: b occurs inside a
            if i != j and len(b) <= len(a):
                p = find(a, b)
                while p >= 0:
                    yield a, (i, 0), (j, p)
                    p = find(a, b, p + 1)


def check_local_confluence(sys: RewriteSystem, max_word_len: int = 8) -> ConfluenceReport:
    """Check critical pairs, then brute-force uniqueness of normal forms for
    every word of length at most ``max_word_len``."""
    pairs = []
    divergences = []
    for word, (i, pi), (j, pj) in critical_words(sys.rules):
        left = sys.normal_form(sys.rewrite_at(word, sys.rules[i], pi))
        right = sys.normal_form(sys.rewrite_at(word, sys.rules[j], pj))
        cp = CriticalPair(word, (i, pi), (j, pj), left, right)
        pairs.append(cp)
        if not cp.joinable:
            divergences.append(
                f"critical pair on {format_word(word)}: {left} != {right}")
    checked = 0
    A = sys.algebra
    for w in A.words(max_word_len):
        checked += 1
        if sys.is_irreducible(w):
            continue
        forms = sys.all_normal_forms(A.word(*w))
        if len(forms) > 1:
            shown = ", ".join(sorted(str(f) for f in forms))
            divergences.append(f"word {format_word(w)} has normal forms {shown}")
    return ConfluenceReport(not divergences, tuple(pairs), max_word_len, checked,
                            tuple(divergences))
