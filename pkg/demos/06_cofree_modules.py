"""
Which simple modules are free over their U'-invariants?
=======================================================

"""

from horoquot import build_root_system
from horoquot.quotient_analysis import check_contraction_hypotheses, classify_cofree, cofree_table

# diagram symmetries are applied before looking a pair up
for name, lam in (("A4", (0, 0, 0, 1)), ("B3", (0, 0, 1)), ("A5", (0, 1, 0, 0, 0)), ("E7", (0,) * 6 + (1,))):
    v = classify_cofree(build_root_system(name), lam)
    print(f"{name} {lam}: {v.tag} (normalized {v.normalized_type} {v.normalized_weight})")

# the same F4 module read in two numberings
f4 = build_root_system("F4")
print("F4 bourbaki w4:", classify_cofree(f4, (0, 0, 0, 1)).tag)
print("F4 table    w1:", classify_cofree(f4, (1, 0, 0, 0), convention="vo").tag)

print(len(cofree_table()), "listed pairs up to rank 8")

# the generator weights of a D6 half-spin invariant ring fail the contraction hypotheses
d6 = build_root_system("D6")
w = d6.fundamental_weight
print(check_contraction_hypotheses(d6, [w(6), w(2), w(6), w(4), d6.zero()]))
