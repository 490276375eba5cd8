"""
Arithmetic in a free graded algebra over GF(2)
==============================================

Polynomials are sets of words; adding is symmetric difference, so every
element is its own negative.
"""

from legdga import FreeAlgebra, homogeneous_degree, reverse

# two generators, spelled al and be, in degrees -1 and 1
A = FreeAlgebra.from_degrees({"al": -1, "be": 1})
rel = A("1 + be al")

print("r       =", rel)
print("r + r   =", rel + rel)
print("r * r   =", rel * rel)        # the cross terms cancel mod 2
print("al be != be al:", A("al be") != A("be al"))

# degrees add along words
print("deg(al al be) =", A.degree_of(("al", "al", "be")))
print("homogeneous degree of al + al al be:", homogeneous_degree(A("al + al al be")))
print("homogeneous degree of al + be:", homogeneous_degree(A("al + be")))

# reversal is an anti-automorphism
p, q = A("al be + 1"), A("be be al")
print("rev(pq) == rev(q) rev(p):", reverse(p * q) == reverse(q) * reverse(p))

# expressions may use parentheses
print("(1 + be)(al + 1) =", A("(1 + be)(al + 1)"))
