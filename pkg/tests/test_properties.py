"""Randomized algebraic laws.

The five laws with 1000-case runs live in test_acceptance.py.
"""

import random

from hypothesis import given, strategies as st

from legdga import (
    Witness,
    apply_automorphism,
    apply_automorphisms,
    apply_differential,
    check_axioms,
    ideal_images,
    mirror,
    reverse,
    verify_witness,
)
from legdga.knots import k6_2_projection

from strategies import AB, A, BA, K, QUICK, elementary_automorphisms, polys, words

M = mirror(K)
_autos, PI = k6_2_projection().bind(K)
S = apply_automorphisms(K, _autos)


@QUICK
@given(polys(), polys(), polys())
def test_addition_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p + A.zero() == p
    assert not (p + p)


@QUICK
@given(polys(max_len=3), polys(max_len=3), polys(max_len=3))
def test_multiplication_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * A.one() == p == A.one() * p
    assert p * (q + r) == p * q + p * r
    assert (q + r) * p == q * p + r * p


@QUICK
@given(words(), words())
def test_degree_additive(u, v):
    assert A.degree_of(u + v) == A.degree_of(u) + A.degree_of(v)
    assert A.degree_of(u[::-1]) == A.degree_of(u)


@QUICK
@given(polys(), polys())
def test_reverse_anti_automorphism(p, q):
    assert reverse(reverse(p)) == p
    assert reverse(p * q) == reverse(q) * reverse(p)


@QUICK
@given(polys())
def test_parse_format_round_trip(p):
    assert A.parse(str(p)) == p


@QUICK
@given(polys(max_len=4), polys(max_len=4))
def test_leibniz(p, q):
    d = lambda x: apply_differential(K, x)
    assert d(p * q) == d(p) * q + p * d(q)
    assert d(p + q) == d(p) + d(q)


@QUICK
@given(polys(max_len=4))
def test_d_squared_zero_everywhere(p):
    assert not apply_differential(K, apply_differential(K, p))
    assert not apply_differential(M, apply_differential(M, p))


@QUICK
@given(polys(max_len=4))
def test_mirror_intertwines_differential(p):
    assert apply_differential(M, reverse(p)) == reverse(apply_differential(K, p))


@QUICK
@given(st.lists(elementary_automorphisms(), max_size=3))
def test_automorphisms_preserve_axioms(phis):
    d = apply_automorphisms(K, phis)
    assert check_axioms(d)
    assert check_axioms(mirror(d))


@QUICK
@given(elementary_automorphisms())
def test_automorphism_is_involution(phi):
    assert apply_automorphism(apply_automorphism(K, phi), phi) == K


@QUICK
@given(polys(AB, max_len=6), polys(AB, max_len=6))
def test_normal_form_laws(p, q):
    nf = BA.normal_form
    assert nf(nf(p)) == nf(p)
    assert nf(p + q) == nf(nf(p) + nf(q))
    for w in nf(p).terms:
        assert BA.is_irreducible(w)


@QUICK
@given(words(AB.names, 10), st.integers(0, 2**32 - 1))
def test_random_reduction_order(w, seed):
    rnd = random.Random(seed)
    # pick redexes at random instead of leftmost-first
    p = AB.word(*w)
    while True:
        choices = [(t, rule, i) for t in p.terms for rule, i in BA.redexes(t)]
        if not choices:
            break
        t, rule, i = rnd.choice(choices)
        p = p + AB.word(*t) + BA.rewrite_at(t, rule, i)
    assert p == BA.normal_form(AB.word(*w))
    assert len(p) == 1
    (nf,) = p.terms
    assert AB.degree_of(nf) == AB.degree_of(w)
    # the form is al^i be^j
    assert list(nf) == sorted(nf)


@QUICK
@given(polys(max_len=3), polys(max_len=3), polys(max_len=2))
def test_witness_check_mirror_symmetric(x, y, z):
    for p, q in ((1, -1), (0, 0), (-1, 1)):
        w = Witness(x, y, z, p, q)
        assert bool(verify_witness(K, w)) == bool(verify_witness(M, w.reversed()))


@QUICK
@given(polys(max_len=4), polys(max_len=4))
def test_projection_multiplicative(p, q):
    assert PI.project(p * q) == PI.project(p) * PI.project(q)
    assert PI.project(p + q) == PI.project(p) + PI.project(q)


@QUICK
@given(polys(max_len=4))
def test_projected_boundaries_lie_in_ideal(p):
    # pi(d p) is in the ideal (1 + be al), so its normal form vanishes
    assert ideal_images(PI, S) == [AB("1 + be al")]
    assert not BA.normal_form(PI.project(apply_differential(S, p)))
