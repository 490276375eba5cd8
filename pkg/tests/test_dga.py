import pytest

from legdga import (
    ChekanovDGA,
    ElementaryAutomorphism,
    FreeAlgebra,
    apply_automorphism,
    apply_automorphisms,
    apply_differential,
    check_axioms,
    mirror,
    parse_automorphism,
    stabilize,
)
from legdga.dga import DGAError

import oracles

# second display of the differential, after a3 -> a3 + 1 and a11 -> a11 + a5
SUBSTITUTED = {
    "a1": "1 + a10 a5 + a10 a5 a3",
    "a2": "a3 + (1 + a3)(a6 a10 + a11 a7 + a5 a7)",
    "a3": "0",
    "a4": "a11 + a11 a7 a5 + a6 a10 a5 + a5 a7 a5",
    "a5": "0",
    "a6": "a11 a8 + a5 a8",
    "a7": "a8 a10",
    "a8": "0",
    "a9": "1 + a10 a5 + a10 a11",
    "a10": "0",
    "a11": "0",
}


def test_shipped_table_matches_oracle(K):
    for g, words in oracles.K_TABLE.items():
        assert K[g].terms == set(words)


def test_differential_on_products(K, A):
    assert apply_differential(K, A("a5 a3")) == A("0")
    assert apply_differential(K, A("a1")) == A("1 + a10 a5 a3")
    assert apply_differential(K, A("1")) == A("0")
    expected = oracles.d_word(oracles.K_TABLE, ("a1", "a9"))
    assert expected == {("a9",), ("a10", "a5", "a3", "a9"), ("a1",), ("a1", "a10", "a11")}
    assert apply_differential(K, A("a1 a9")).terms == expected


def test_d_squared_a2_by_oracle(K, A):
    dd = oracles.d_poly(oracles.K_TABLE, set(map(tuple, oracles.K_TABLE["a2"])))
    assert dd == set()
    assert not apply_differential(K, K["a2"])


def test_axioms_paper_dga(K):
    report = check_axioms(K)
    assert report.degree_ok and report.d_squared_zero and report.details == ()


def test_axioms_degree_violation():
    d = ChekanovDGA.from_table({"a": 1}, {"a": "a"})
    report = check_axioms(d)
    assert not report.degree_ok
    assert "expected degree 0" in report.details[0]


def test_axioms_d_squared_violation():
    d = ChekanovDGA.from_table({"x": 2, "y": 1, "u": 0}, {"x": "y", "y": "u", "u": "0"})
    report = check_axioms(d)
    assert report.degree_ok and not report.d_squared_zero


def test_axioms_unit_differential():
    d = ChekanovDGA.from_table({"e": 1}, {"e": "1"})
    assert check_axioms(d)


def test_missing_and_unknown_entries():
    A = FreeAlgebra.from_degrees({"a": 1, "b": 0})
    with pytest.raises(DGAError, match="missing differential for b"):
        ChekanovDGA(A, {"a": A("b")})
    with pytest.raises(Exception, match="unknown generator c"):
        ChekanovDGA(A, {"a": A("b"), "b": A("0"), "c": A("0")})


def test_mirror(K, A):
    M = mirror(K)
    assert M["a1"] == A("1 + a3 a5 a10")
    assert M["a9"] == A("1 + a11 a10")
    assert M["a3"] == A("0")
    assert check_axioms(M)
    assert mirror(M) == K
    assert M.name == "M(K6_2)"


def test_automorphism_golden(K, A):
    S = apply_automorphisms(K, [parse_automorphism(A, "a3 -> a3 + 1"),
                                parse_automorphism(A, "a11 -> a11 + a5")])
    for g, text in SUBSTITUTED.items():
        assert S[g] == A(text), g
    assert S["a6"] == A("a11 a8 + a5 a8")
    assert check_axioms(S)


def test_automorphism_twice_is_identity(K, A):
    phi = ElementaryAutomorphism("a3", A("1"))
    assert apply_automorphism(apply_automorphism(K, phi), phi) == K


def test_automorphism_validation(K, A):
    with pytest.raises(DGAError, match="mentions its target"):
        apply_automorphism(K, ElementaryAutomorphism("a3", A("a3 a3")))
    with pytest.raises(DGAError, match="homogeneous"):
        apply_automorphism(K, ElementaryAutomorphism("a3", A("a5")))
    with pytest.raises(DGAError):
        parse_automorphism(A, "a3 a3 + 1")


def test_automorphism_moves_nontrivial_differential(K, A):
    # a1 -> a1 + a10 a3 changes d a1 by d(a10 a3) = 0 and leaves the rest alone
    S = apply_automorphism(K, ElementaryAutomorphism("a1", A("a10 a3")))
    assert S == K
    # a4 -> a4 + a3 a3 changes nothing else but stays consistent
    S = apply_automorphism(K, parse_automorphism(A, "a4 -> a4 + a3 a3"))
    assert check_axioms(S) and S["a4"] == K["a4"]


def test_stabilize(K):
    S = stabilize(K, 2)
    assert len(S.algebra.generators) == 13
    assert check_axioms(S)
    assert S["e1"] == S.algebra("e2") and not S["e2"]
    assert S.algebra.generator_degree("e2") == 1


def test_stabilize_empty():
    E = ChekanovDGA(FreeAlgebra(()), {})
    S = stabilize(E, 0)
    assert S.algebra.names == ("e1", "e2")
    assert S["e1"] == S.algebra("e2")
    assert check_axioms(S)


def test_stabilize_collision(K):
    with pytest.raises(DGAError, match="a1"):
        stabilize(K, 1, ("a1", "e"))
