"""Unit-product obstruction: does 1 lie in H_p . H_q?

A positive answer is certified by a witness ``(x, y, z)`` with
``dx = dy = 0`` and ``1 + xy = dz``.  A negative answer is certified by a
grading-preserving projection onto a small free algebra where the images of
the differentials generate an ideal whose quotient has computable normal
forms; a witness would push forward to ``x'y' = 1`` in that quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    AlgebraError,
    FreeAlgebra,
    Polynomial,
    is_homogeneous,
    reverse,
    substitute,
)
from .dga import (
    ChekanovDGA,
    ElementaryAutomorphism,
    apply_automorphisms,
    apply_differential,
    parse_automorphism,
)
from .rewrite import (
    RewriteError,
    RewriteSystem,
    check_local_confluence,
    ideal_images,
)

NONISOMORPHIC = "nonisomorphic graded homology algebras"
UNDETERMINED = "undetermined"

DEFAULT_SEARCH_BUDGET = 2_000_000
DEFAULT_ELEMENT_BUDGET = 1 << 16
CONFLUENCE_CHECK_LENGTH = 8


class ObstructionError(AlgebraError):
    pass


class SearchBudgetExceeded(ObstructionError):
    pass


class NonConfluentError(ObstructionError):
    pass


# -- projections ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProjectionMap:
    """Algebra map ``source -> target`` given by images of generators."""

    source: FreeAlgebra
    target: FreeAlgebra
    images: Mapping[str, Polynomial]

    def __post_init__(self):
        images = dict(self.images)
        for g in images:
            self.source.index(g)
        for g in self.source.names:
            img = images.setdefault(g, self.target.zero())
            if img.algebra != self.target:
                raise ObstructionError(f"image of {g} is not in the target algebra")
            deg = self.source.generator_degree(g)
            if not is_homogeneous(img, deg):
                raise ObstructionError(
                    f"projection is not grading-preserving: {g} (degree {deg}) -> {img}")
        object.__setattr__(self, "images", {g: images[g] for g in self.source.names})

    def project(self, p: Polynomial) -> Polynomial:
        if p.algebra != self.source:
            raise ObstructionError("polynomial does not lie in the projection's source")
        return substitute(p, self.images, self.target)

    __call__ = project

    def table(self) -> List[str]:
        return [f"map {g} -> {img}" for g, img in self.images.items() if img] + ["default -> 0"]


def project(projection: ProjectionMap, p: Polynomial) -> Polynomial:
    return projection.project(p)


@dataclass(frozen=True)
class ProjectionSpec:
    """A projection recipe not yet tied to a source algebra, as read from a
    map file: optional changes of generators, then generator images."""

    target: FreeAlgebra
    images: Mapping[str, Polynomial]
    default_zero: bool = True
    substitutions: Tuple[str, ...] = ()

    def bind(self, dga: ChekanovDGA) -> Tuple[List[ElementaryAutomorphism], ProjectionMap]:
        autos = [parse_automorphism(dga.algebra, s) for s in self.substitutions]
        if not self.default_zero:
            missing = [g for g in dga.algebra.names if g not in self.images]
            if missing:
                raise ObstructionError(f"no image given for {', '.join(missing)}")
        return autos, ProjectionMap(dga.algebra, self.target, self.images)


# -- witnesses ------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    x: Polynomial
    y: Polynomial
    z: Polynomial
    p: int
    q: int

    def reversed(self) -> "Witness":
        """The corresponding witness for the mirror DGA."""
        return Witness(reverse(self.y), reverse(self.x), reverse(self.z), self.q, self.p)

    def __str__(self):
        return f"x = {self.x}; y = {self.y}; z = {self.z}; degrees ({self.p},{self.q})"


@dataclass(frozen=True)
class WitnessCheck:
    valid: bool
    reason: str = "ok"

    def __bool__(self):
        return self.valid


def verify_witness(dga: ChekanovDGA, w: Witness) -> WitnessCheck:
    A = dga.algebra
    if A.reduce_degree(w.p + w.q) != 0:
        return WitnessCheck(False, f"degrees {w.p} + {w.q} != 0, but 1 has degree 0")
    for label, poly in (("x", w.x), ("y", w.y), ("z", w.z)):
        if poly.algebra != A:
            return WitnessCheck(False, f"{label} is not in the DGA's algebra")
    for label, poly, deg in (("x", w.x, w.p), ("y", w.y, w.q), ("z", w.z, w.p + w.q + 1)):
        if not is_homogeneous(poly, deg):
            return WitnessCheck(False, f"{label} = {poly} is not homogeneous of degree {deg}")
    for label, poly in (("x", w.x), ("y", w.y)):
        dp = apply_differential(dga, poly)
        if dp:
            return WitnessCheck(False, f"d{label} = {dp} != 0")
    lhs = A.one() + w.x * w.y
    dz = apply_differential(dga, w.z)
    if lhs != dz:
        return WitnessCheck(False, f"1 + xy = {lhs} != dz = {dz}")
    return WitnessCheck(True)


def _cycles(dga: ChekanovDGA, degree: int, max_len: int, max_terms: int, budget: int):
    """Homogeneous cycles of ``degree`` with at most ``max_terms`` words, each
    of length 1..max_len, in order (term count, degree-lex)."""
    A = dga.algebra
    words = list(A.words(max_len, degree, min_length=1))
    d_of = {w: apply_differential(dga, A.word(*w)) for w in words}
    out = [A.word(*w) for w in words if not d_of[w]]
    if max_terms >= 2:
        groups: Dict[Polynomial, list] = {}
        for w in words:
            if d_of[w]:
                groups.setdefault(d_of[w], []).append(w)
        pairs = [(u, v) for ws in groups.values() for u, v in itertools.combinations(ws, 2)]
        pairs.sort(key=lambda uv: (A.word_key(uv[0]), A.word_key(uv[1])))
        out.extend(A.poly(uv) for uv in pairs)
    for k in range(3, max_terms + 1):
        count = 0
        for combo in itertools.combinations(words, k):
            count += 1
            if count > budget:
                raise SearchBudgetExceeded(f"more than {budget} {k}-term candidates")
            total = A.zero()
            for w in combo:
                total = total + d_of[w]
            if not total:
                out.append(A.poly(combo))
    if len(out) > budget:
        raise SearchBudgetExceeded(f"{len(out)} cycle candidates exceed budget {budget}")
    return out


def search_witness(dga: ChekanovDGA, p: int, q: int, max_len: int, *,
                   max_terms: int = 2, max_z_terms: int = 2,
                   budget: int = DEFAULT_SEARCH_BUDGET) -> Optional[Witness]:
    """Bounded search for a unit-product witness in degrees ``(p, q)``.

    ``x`` and ``y`` range over cycles with at most ``max_terms`` nonconstant
    words of length at most ``max_len``; ``z`` over sums of at most
    ``max_z_terms`` generators of degree ``p + q + 1``.  Returns the first
    valid witness in a fixed order, or None.
    """
    if max_len < 1:
        raise ObstructionError("max_len must be at least 1")
    A = dga.algebra
    if A.reduce_degree(p + q) != 0:
        return None
    zdeg = A.reduce_degree(p + q + 1)
    zgens = [g for g in A.names if A.reduce_degree(A.generator_degree(g)) == zdeg]
    targets: Dict[frozenset, Polynomial] = {}
    for k in range(1, max_z_terms + 1):
        for combo in itertools.combinations(zgens, k):
            z = A.poly((g,) for g in combo)
            targets.setdefault((A.one() + apply_differential(dga, z)).terms, z)
    if not targets:
        return None
    xs = _cycles(dga, p, max_len, max_terms, budget)
    ys = _cycles(dga, q, max_len, max_terms, budget)
    if len(xs) * len(ys) > budget:
        raise SearchBudgetExceeded(
            f"{len(xs)} x {len(ys)} candidate pairs exceed budget {budget}")
    lengths = {len(t) for t in targets}
    for x in xs:
        for y in ys:
            if len(x) * len(y) < min(lengths):
                continue
            prod = x * y
            z = targets.get(prod.terms)
            if z is not None:
                return Witness(x, y, z, p, q)
    return None


# -- refutation -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RefutationReport:
    """Outcome of pushing the unit-product question into a quotient algebra.

    ``status`` is ``"structural"`` (holds at every length), ``"bounded"``
    (holds up to ``max_len``) or ``"inconclusive"``.
    """

    p: int
    q: int
    max_len: int
    status: str
    projection: ProjectionMap
    automorphisms: Tuple[ElementaryAutomorphism, ...]
    ideal_generators: Tuple[Polynomial, ...]
    system: Optional[RewriteSystem]
    confluence_length: int = 0
    left_forms: Tuple[Polynomial, ...] = ()
    right_forms: Tuple[Polynomial, ...] = ()
    pairs_checked: int = 0
    counterexample: Optional[Tuple[Polynomial, Polynomial]] = None
    reason: str = ""

    @property
    def refuted(self) -> bool:
        return self.status in ("structural", "bounded")

    def format(self) -> str:
        lines = [f"refutation of 1 in H_{self.p} . H_{self.q}: {self.status}"]
        for phi in self.automorphisms:
            lines.append(f"  subst {phi}")
        T = self.projection.target
        for g in T.generators:
            lines.append(f"  gen {g.name} : {g.degree}")
        lines.extend(f"  {row}" for row in self.projection.table())
        lines.extend(f"  ideal generator: {r}" for r in self.ideal_generators)
        if self.system is not None:
            lines.extend(f"  rule: {r}" for r in self.system.rules)
            lines.append(f"  confluence checked on all words up to length {self.confluence_length}")
        lines.append(f"  bound: word length <= {self.max_len}")
        lines.append(f"  degree {self.p} normal-form monomials: "
                     + (", ".join(str(f) for f in self.left_forms) or "none"))
        lines.append(f"  degree {self.q} normal-form monomials: "
                     + (", ".join(str(f) for f in self.right_forms) or "none"))
        lines.append(f"  pairs checked: {self.pairs_checked}")
        if self.counterexample:
            x, y = self.counterexample
            lines.append(f"  normal form of ({x})({y}) is 1")
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        return "\n".join(lines)


def _structural_reason(system: RewriteSystem, p: int, q: int) -> Optional[str]:
    """Closed-form argument for a two-generator quotient by a single relation
    ``b a = 1``: normal forms are ``a^i b^j`` and the product of ``a^i b^j``
    with ``a^k b^l`` has ``a``-exponent at least ``i`` and ``b``-exponent at
    least ``l``.  So if degree ``p`` forces ``i >= 1`` (or degree ``q`` forces
    ``l >= 1``) no product is 1, whatever the length."""
    T = system.algebra
    if T.modulus or len(T.generators) != 2 or len(system.rules) != 1:
        return None
    rule = system.rules[0]
    if len(rule.lhs) != 2 or rule.lhs[0] == rule.lhs[1] or not rule.rhs.is_one():
        return None
    b, a = rule.lhs
    da, db = T.generator_degree(a), T.generator_degree(b)

    def hits(step, target):
        # some n >= 0 with n * step == target
        if step == 0:
            return target == 0
        return target % step == 0 and target // step >= 0

    if not hits(db, p):
        return (f"normal forms are {a}^i {b}^j; degree {p} forces i >= 1 in every "
                f"monomial of x', right multiplication never lowers i, so x'y' has no "
                f"constant term")
    if not hits(da, q):
        return (f"normal forms are {a}^i {b}^j; degree {q} forces j >= 1 in every "
                f"monomial of y', left multiplication never lowers j, so x'y' has no "
                f"constant term")
    return None


def normal_form_monomials(system: RewriteSystem, degree: int, max_len: int) -> List[Polynomial]:
    T = system.algebra
    return [T.word(*w) for w in T.words(max_len, degree) if system.is_irreducible(w)]


def refute_unit_product(dga: ChekanovDGA, p: int, q: int, projection: ProjectionMap,
                        max_len: int, *, automorphisms: Sequence[ElementaryAutomorphism] = (),
                        confluence_length: int = CONFLUENCE_CHECK_LENGTH,
                        element_budget: int = DEFAULT_ELEMENT_BUDGET,
                        pair_budget: int = DEFAULT_SEARCH_BUDGET) -> RefutationReport:
    """Try to show 1 is not in H_p . H_q by projecting to a quotient algebra.

    ``automorphisms`` are applied to ``dga`` first (left to right).  Raises
    ``NonConfluentError`` when the induced rewrite system is not confluent.
    """
    autos = tuple(automorphisms)
    work = apply_automorphisms(dga, autos)
    if projection.source != work.algebra:
        raise ObstructionError("projection source does not match the DGA's algebra")
    images = tuple(ideal_images(projection, work))
    base = dict(p=p, q=q, max_len=max_len, projection=projection,
                automorphisms=autos, ideal_generators=images)
    T = projection.target
    if T.reduce_degree(p + q) != 0:
        return RefutationReport(status="structural", system=None,
                                reason="p + q != 0, so xy cannot have degree 0", **base)
    try:
        system = RewriteSystem.from_relations(T, images)
    except RewriteError as exc:
        return RefutationReport(status="inconclusive", system=None,
                                reason=f"quotient is trivial: {exc}", **base)
    confluence = check_local_confluence(system, confluence_length)
    if not confluence:
        raise NonConfluentError("; ".join(confluence.divergences))

    left = normal_form_monomials(system, p, max_len)
    right = normal_form_monomials(system, q, max_len)
    for forms in (left, right):
        if len(forms) > 30 or (1 << len(forms)) - 1 > element_budget:
            raise SearchBudgetExceeded(
                f"{len(forms)} normal-form monomials give more than {element_budget} elements")
    n_left, n_right = (1 << len(left)) - 1, (1 << len(right)) - 1
    if n_left * n_right > pair_budget:
        raise SearchBudgetExceeded(f"{n_left} x {n_right} pairs exceed budget {pair_budget}")

    # normal form of x'y' is bilinear in the monomials of x' and y'
    prod_nf = [[system.normal_form(u * v).terms for v in right] for u in left]
    one = frozenset([()])
    checked = 0
    report = dict(base, system=system, confluence_length=confluence_length,
                  left_forms=tuple(left), right_forms=tuple(right))
    for xmask in range(1, n_left + 1):
        xi = [i for i in range(len(left)) if xmask >> i & 1]
        row: List[frozenset] = []
        for j in range(len(right)):
            acc: frozenset = frozenset()
            for i in xi:
                acc = acc ^ prod_nf[i][j]
            row.append(acc)
        for ymask in range(1, n_right + 1):
            checked += 1
            acc = frozenset()
            for j in range(len(right)):
                if ymask >> j & 1:
                    acc = acc ^ row[j]
            if acc == one:
                x = sum((left[i] for i in xi), T.zero())
                y = sum((right[j] for j in range(len(right)) if ymask >> j & 1), T.zero())
                return RefutationReport(status="inconclusive", pairs_checked=checked,
                                        counterexample=(x, y),
                                        reason="the quotient does not obstruct these degrees",
                                        **report)
    reason = _structural_reason(system, p, q)
    if reason:
        return RefutationReport(status="structural", pairs_checked=checked, reason=reason, **report)
    return RefutationReport(status="bounded", pairs_checked=checked,
                            reason=f"no product of normal forms up to length {max_len} is 1",
                            **report)


# -- claims and verdicts ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class UnitProductClaim:
    """The statement "1 lies in H_p . H_q" for a DGA, with its certificate."""

    dga: ChekanovDGA
    p: int
    q: int
    status: str = "undetermined"   # proved-with-witness | refuted-via-projection | undetermined
    witness: Optional[Witness] = None
    refutation: Optional[RefutationReport] = None

    def __post_init__(self):
        if self.status == "proved-with-witness":
            if self.witness is None or not verify_witness(self.dga, self.witness):
                raise ObstructionError("a proved claim needs a valid witness")
        elif self.status == "refuted-via-projection":
            if self.refutation is None or not self.refutation.refuted:
                raise ObstructionError("a refuted claim needs a refutation record")
        elif self.status != "undetermined":
            raise ObstructionError(f"unknown claim status {self.status}")

    def format(self) -> str:
        head = f"claim: 1 in H_{self.p}({self.dga.name}) . H_{self.q}({self.dga.name}): {self.status}"
        if self.witness is not None:
            return head + f"\n  witness: {self.witness}"
        if self.refutation is not None:
            return head + "\n" + "\n".join("  " + l for l in self.refutation.format().splitlines())
        return head


@dataclass(frozen=True, eq=False)
class Verdict:
    verdict: str
    p: int
    q: int
    claims: Tuple[UnitProductClaim, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def distinguished(self) -> bool:
        return self.verdict == NONISOMORPHIC

    def format(self) -> str:
        lines = []
        for c in self.claims:
            lines.append(c.format())
        lines.extend(self.notes)
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _try_direction(d1, d2, p, q, max_len, spec, witness_len, budget):
    notes = []
    witness = search_witness(d1, p, q, witness_len, budget=budget)
    claim1 = UnitProductClaim(d1, p, q, "proved-with-witness", witness) if witness \
        else UnitProductClaim(d1, p, q)
    if witness is None:
        notes.append(f"no witness for 1 in H_{p} . H_{q} in {d1.name} up to length {witness_len}")
    autos, proj = spec.bind(d2)
    report = refute_unit_product(d2, p, q, proj, max_len, automorphisms=autos)
    claim2 = UnitProductClaim(d2, p, q, "refuted-via-projection", refutation=report) \
        if report.refuted else UnitProductClaim(d2, p, q, refutation=None)
    if not report.refuted:
        notes.append(f"projection does not obstruct 1 in H_{p} . H_{q} for {d2.name}: "
                     f"{report.reason}")
    return claim1, claim2, notes


def distinguish(d1: ChekanovDGA, d2: ChekanovDGA, p: int, q: int, max_len: int,
                projection: Optional[ProjectionSpec] = None, *,
                witness_len: Optional[int] = None,
                budget: int = DEFAULT_SEARCH_BUDGET) -> Verdict:
    """Separate two DGAs by the unit-product property in degrees ``(p, q)``.

    Looks for a witness in ``d1`` and a projection refutation in ``d2``, then
    the other way round.  ``max_len`` bounds the refutation enumeration; the
    witness search uses ``witness_len`` (default ``min(max_len, 3)``).
    ``projection`` defaults to the shipped 6_2 one.
    """
    if witness_len is None:
        witness_len = min(max_len, 3)
    if projection is None:
        from .knots import k6_2_projection
        projection = k6_2_projection()
    notes: List[str] = []
    for a, b in ((d1, d2), (d2, d1)):
        c1, c2, n = _try_direction(a, b, p, q, max_len, projection, witness_len, budget)
        if c1.status == "proved-with-witness" and c2.status == "refuted-via-projection":
            return Verdict(NONISOMORPHIC, p, q, (c1, c2))
        notes.extend(n)
    return Verdict(UNDETERMINED, p, q, (), tuple(dict.fromkeys(notes)))
