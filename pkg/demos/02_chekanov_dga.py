"""
The Chekanov DGA of the 6_2 knot
================================

Load the shipped differential table, check the axioms, mirror it, and
change generators.
"""

from legdga import (
    apply_automorphisms,
    apply_differential,
    check_axioms,
    format_dga,
    k6_2,
    mirror,
    parse_automorphism,
    stabilize,
)

K = k6_2()
print(format_dga(K))
print("axioms:", check_axioms(K))

A = K.algebra
# the differential extends to products by the Leibniz rule
print("d(a1 a9) =", apply_differential(K, A("a1 a9")))

# the mirror reverses every monomial
M = mirror(K)
print("mirror d a1 =", M["a1"])
print("mirror axioms:", check_axioms(M))

# replace a3 by a3 + 1 and a11 by a11 + a5
autos = [parse_automorphism(A, "a3 -> a3 + 1"), parse_automorphism(A, "a11 -> a11 + a5")]
S = apply_automorphisms(K, autos)
for g in ("a1", "a2", "a4", "a6", "a9"):
    print(f"d {g} =", S[g])
print("same substitutions again restore K:", apply_automorphisms(S, autos) == K)

# stabilization adds a cancelling pair
T = stabilize(K, 2)
print("stabilized generators:", len(T.algebra.generators), check_axioms(T))
