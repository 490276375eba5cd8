"""Chekanov DGAs of Legendrian knots over GF(2)."""

from .algebra import (
    ANY_DEGREE,
    FreeAlgebra,
    Generator,
    Polynomial,
    add,
    degree_of,
    homogeneous_degree,
    is_homogeneous,
    mul,
    reverse,
    substitute,
)
from .dga import (
    AxiomReport,
    ChekanovDGA,
    ElementaryAutomorphism,
    KnotMetadata,
    apply_automorphism,
    apply_automorphisms,
    apply_differential,
    check_axioms,
    mirror,
    parse_automorphism,
    stabilize,
)
from .rewrite import (
    RewriteRule,
    RewriteSystem,
    check_local_confluence,
    ideal_images,
    normal_form,
    orient,
    reduce_once,
)
from .obstruction import (
    NONISOMORPHIC,
    UNDETERMINED,
    ProjectionMap,
    ProjectionSpec,
    RefutationReport,
    UnitProductClaim,
    Verdict,
    Witness,
    distinguish,
    project,
    refute_unit_product,
    search_witness,
    verify_witness,
)
from .io import format_dga, parse_dga, parse_projection, parse_rules
from .knots import k6_2, k6_2_mirror, k6_2_projection, k6_2_rules

__version__ = "0.1.0"
