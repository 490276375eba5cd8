"""
K is not Legendrian isotopic to its mirror
==========================================

In K, 1 = x y in homology for x in degree 1 and y in degree -1.  In the
mirror this fails: project to the algebra on al, be modulo 1 + al be, where
no product of a degree 1 and a degree -1 element is 1.
"""

from legdga import (
    Witness,
    distinguish,
    k6_2,
    k6_2_projection,
    mirror,
    refute_unit_product,
    search_witness,
    verify_witness,
)

K = k6_2()
M = mirror(K)
A = K.algebra

for y, z in (("a5 a3", "a1"), ("a11", "a9")):
    w = Witness(A("a10"), A(y), A(z), 1, -1)
    print(w, "->", verify_witness(K, w).reason)
    print("  mirrored:", w.reversed(), "->", verify_witness(M, w.reversed()).reason)

print("bounded search:", search_witness(K, 1, -1, 2))

# in K the obstruction lives in degrees (-1, 1)
autos, pi = k6_2_projection().bind(K)
print(refute_unit_product(K, -1, 1, pi, 9, automorphisms=autos).format())

verdict = distinguish(K, M, 1, -1, 9)
print(verdict.format())
