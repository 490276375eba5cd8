"""
Normal forms in the quotient by 1 + be al
=========================================

The relation is oriented as be al -> 1; every word then reduces to
al^i be^j.
"""

from legdga import FreeAlgebra, RewriteSystem, check_local_confluence

A = FreeAlgebra.from_degrees({"al": -1, "be": 1})
R = RewriteSystem.from_relations(A, [A("1 + be al")])
print(R)

for text in ("be al be al", "al be al be", "be be al", "be al al be be"):
    print(f"{text:>16} -> {R.normal_form(A(text))}")

report = check_local_confluence(R, 8)
print("confluent:", report.confluent, "| words checked:", report.words_checked)

# every reduction order lands on the same normal form
print(R.all_normal_forms(A("be be al al be al")))
