"""Chekanov differential graded algebras over GF(2).

The differential is stored on generators and extended to the whole free
algebra by the Leibniz rule, which carries no signs in characteristic 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    AlgebraError,
    FreeAlgebra,
    Generator,
    Polynomial,
    UnknownGeneratorError,
    homogeneous_degree,
    is_homogeneous,
    reverse,
    substitute,
)


class DGAError(AlgebraError):
    pass


@dataclass(frozen=True)
class KnotMetadata:
    name: str = "unnamed"
    smooth_type: Optional[str] = None
    tb: Optional[int] = None
    maslov: int = 0

    @property
    def grading_modulus(self) -> int:
        return 2 * abs(self.maslov)


@dataclass(frozen=True)
class AxiomReport:
    degree_ok: bool
    d_squared_zero: bool
    details: Tuple[str, ...] = ()

    def __bool__(self):
        return self.degree_ok and self.d_squared_zero


@dataclass(frozen=True, eq=False)
class ChekanovDGA:
    algebra: FreeAlgebra
    differential: Mapping[str, Polynomial]
    metadata: KnotMetadata = field(default_factory=KnotMetadata)

    def __post_init__(self):
        diff = dict(self.differential)
        for name in diff:
            if name not in self.algebra:
                raise UnknownGeneratorError(name)
        for name in self.algebra.names:
            if name not in diff:
                raise DGAError(f"missing differential for {name}")
            if diff[name].algebra != self.algebra:
                raise DGAError(f"differential of {name} lies in a different algebra")
        object.__setattr__(self, "differential", {n: diff[n] for n in self.algebra.names})

    @classmethod
    def from_table(cls, degrees: Mapping[str, int], table: Mapping[str, str],
                   metadata: Optional[KnotMetadata] = None) -> "ChekanovDGA":
        """Build a DGA from ``{name: degree}`` and ``{name: "expression"}``."""
        metadata = metadata or KnotMetadata()
        algebra = FreeAlgebra.from_degrees(degrees, metadata.grading_modulus)
        return cls(algebra, {g: algebra.parse(table[g]) for g in table}, metadata)

    @property
    def name(self) -> str:
        return self.metadata.name

    def __eq__(self, other):
        if not isinstance(other, ChekanovDGA):
            return NotImplemented
        return (self.algebra == other.algebra and self.metadata == other.metadata
                and self.differential == other.differential)

    def __getitem__(self, name: str) -> Polynomial:
        try:
            return self.differential[name]
        except KeyError:
            raise UnknownGeneratorError(name) from None

    def d(self, p: Polynomial) -> Polynomial:
        return apply_differential(self, p)

    def __call__(self, text: str) -> Polynomial:
        return self.algebra.parse(text)


def apply_differential(dga: ChekanovDGA, p: Polynomial) -> Polynomial:
    A = dga.algebra
    if p.algebra != A:
        raise DGAError("polynomial does not belong to the DGA's algebra")
    result: set = set()
    for w in p.terms:
        for i, g in enumerate(w):
            dg = dga[g]
            if not dg:
                continue
            left, right = w[:i], w[i + 1:]
            for v in dg.terms:
                result ^= {left + v + right}
    return type(p)(A, frozenset(result))


def check_axioms(dga: ChekanovDGA) -> AxiomReport:
    details: List[str] = []
    degree_ok = True
    d_squared_zero = True
    A = dga.algebra
    for name in A.names:
        dg = dga[name]
        want = A.generator_degree(name) - 1
        if not is_homogeneous(dg, want):
            degree_ok = False
            got = homogeneous_degree(dg)
            got = "inhomogeneous" if got is None else f"degree {got}"
            details.append(f"d {name} = {dg} is {got}, expected degree {A.reduce_degree(want)}")
        ddg = apply_differential(dga, dg)
        if ddg:
            d_squared_zero = False
            details.append(f"d^2 {name} = {ddg} != 0")
    return AxiomReport(degree_ok, d_squared_zero, tuple(details))


def _mirror_metadata(meta: KnotMetadata) -> KnotMetadata:
    name = meta.name
    if name.startswith("M(") and name.endswith(")"):
        name = name[2:-1]
    else:
        name = f"M({name})"
    # mirroring negates the Maslov number; the grading modulus is unchanged
    return KnotMetadata(name, meta.smooth_type, meta.tb, -meta.maslov)


def mirror(dga: ChekanovDGA) -> ChekanovDGA:
    """The Legendrian mirror: every monomial of every differential reversed."""
    return ChekanovDGA(dga.algebra,
                       {g: reverse(p) for g, p in dga.differential.items()},
                       _mirror_metadata(dga.metadata))


@dataclass(frozen=True)
class ElementaryAutomorphism:
    """The tame change of generators ``target -> target + shift``."""

    target: str
    shift: Polynomial

    def validate(self, algebra: FreeAlgebra) -> None:
        if self.target not in algebra:
            raise UnknownGeneratorError(self.target)
        if self.shift.algebra != algebra:
            raise DGAError("automorphism shift lies in a different algebra")
        if self.target in self.shift.generators_used():
            raise DGAError(f"shift {self.shift} mentions its target {self.target}")
        if not is_homogeneous(self.shift, algebra.generator_degree(self.target)):
            raise DGAError(
                f"shift {self.shift} is not homogeneous of degree "
                f"{algebra.generator_degree(self.target)}")

    def __str__(self):
        return f"{self.target} -> {self.target} + {self.shift}"


def parse_automorphism(algebra: FreeAlgebra, text: str) -> ElementaryAutomorphism:
    """Parse ``"a3 -> a3 + 1"``; the right side must be the target plus a shift."""
    if "->" not in text:
        raise DGAError(f"expected '<gen> -> <poly>', got {text!r}")
    lhs, rhs = (s.strip() for s in text.split("->", 1))
    if lhs not in algebra:
        raise UnknownGeneratorError(lhs)
    shift = algebra.parse(rhs) + algebra.gen(lhs)
    if lhs in shift.generators_used():
        raise DGAError(f"{text!r} is not of the form {lhs} -> {lhs} + u with u free of {lhs}")
    return ElementaryAutomorphism(lhs, shift)


def apply_automorphism(dga: ChekanovDGA, phi: ElementaryAutomorphism) -> ChekanovDGA:
    """Rewrite the DGA in the generators obtained by replacing ``g`` with ``g + u``.

    The new differential is ``S . d . S`` where ``S`` substitutes ``g + u`` for
    ``g``; ``S`` is its own inverse over GF(2), so the generator keeps its name.
    """
    A = dga.algebra
    phi.validate(A)
    images = {phi.target: A.gen(phi.target) + phi.shift}
    new_diff = {}
    for g in A.names:
        pre = A.gen(g) + phi.shift if g == phi.target else A.gen(g)
        new_diff[g] = substitute(apply_differential(dga, pre), images, A)
    return ChekanovDGA(A, new_diff, dga.metadata)


def apply_automorphisms(dga: ChekanovDGA, phis: Iterable[ElementaryAutomorphism]) -> ChekanovDGA:
    """Apply elementary automorphisms left to right."""
    for phi in phis:
        dga = apply_automorphism(dga, phi)
    return dga


def stabilize(dga: ChekanovDGA, degree: int, names: Sequence[str] = ("e1", "e2")) -> ChekanovDGA:
    """Adjoin ``e1`` in ``degree`` and ``e2`` in ``degree - 1`` with ``d e1 = e2``."""
    e1, e2 = names
    if e1 == e2:
        raise DGAError("stabilization generators must be distinct")
    for n in (e1, e2):
        if n in dga.algebra:
            raise DGAError(f"generator {n} already exists")
    A = dga.algebra
    B = FreeAlgebra(A.generators + (Generator(e1, degree), Generator(e2, degree - 1)),
                    A.modulus, A.max_word_length)
    diff = {g: B.poly(p.terms) for g, p in dga.differential.items()}
    diff[e1] = B.gen(e2)
    diff[e2] = B.zero()
    return ChekanovDGA(B, diff, dga.metadata)
