"""
Root systems and Weyl groups
============================

"""

from horoquot import build_root_system, cartan_inverse_diagonal
from horoquot.weylgroup import enumerate_weyl, minimal_coset_reps

# node numbering follows Bourbaki; G2 puts the short root first
g2 = build_root_system("G2")
print("G2 Cartan matrix:", g2.cartan)
print("positive roots (simple-root coordinates):", g2.positive_roots)

# the diagonal of the inverse Cartan matrix separates type A from the rest
for name in ("A4", "B4", "D5", "E6"):
    print(name, "diag C^-1 =", [str(x) for x in cartan_inverse_diagonal(build_root_system(name))])

# Weyl group elements come with reduced words and lengths
a3 = build_root_system("A3")
elems = enumerate_weyl(a3)
print("|W(A3)| =", len(elems), " longest element:", elems[-1].word)

# minimal coset representatives for the parabolic subgroup of nodes {2, 3}
reps = minimal_coset_reps(a3, {2, 3})
print("W^{2,3} words:", [w.word for w in reps.reps])
