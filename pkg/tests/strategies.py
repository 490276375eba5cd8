from hypothesis import settings, strategies as st

from legdga import k6_2, k6_2_rules

K = k6_2()
A = K.algebra
NAMES = A.names
BA = k6_2_rules()
AB = BA.algebra

THOROUGH = settings(max_examples=1000, deadline=None)
QUICK = settings(max_examples=200, deadline=None)


def words(names=NAMES, max_len=5):
    return st.lists(st.sampled_from(names), max_size=max_len).map(tuple)


def polys(algebra=A, max_terms=6, max_len=5):
    return st.lists(words(algebra.names, max_len), max_size=max_terms).map(algebra.poly)


@st.composite
def elementary_automorphisms(draw, algebra=A):
    """g -> g + u with u a sum of words of degree deg(g) avoiding g."""
    from legdga import ElementaryAutomorphism

    g = draw(st.sampled_from(algebra.names))
    others = [n for n in algebra.names if n != g]
    target = algebra.generator_degree(g)
    ws = draw(st.lists(words(others, 3), max_size=4))
    ws = [w for w in ws if algebra.degree_of(w) == target]
    return ElementaryAutomorphism(g, algebra.poly(ws))
