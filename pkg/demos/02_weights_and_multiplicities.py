"""
Weight multiplicities and the U'-invariant weight box
=====================================================

"""

from horoquot import build_root_system
from horoquot.repdata import (
    chain_weight,
    freudenthal_multiplicity,
    multiplicity_table,
    u2_weight_set,
    weyl_dimension,
)

a2 = build_root_system("A2")
adjoint = a2.fundamental_weight(1) + a2.fundamental_weight(2)

# two independent counts of the same module: Weyl's product and Freudenthal's recursion
table = multiplicity_table(a2, adjoint)
print("dim R(w1+w2) =", weyl_dimension(a2, adjoint), "=", table.dimension())
print("zero weight multiplicity:", table[a2.zero()])

# the weights of R(lam)^{U'} form a box below lam, of size prod(a_i + 1)
box = u2_weight_set(a2, (2, 1))
print("box for 2w1+w2 has", len(box), "weights:")
for mu in box:
    print("  ", mu, " multiplicity", freudenthal_multiplicity(a2, (2, 1), mu))

# walking down a Dynkin path from a fundamental weight keeps multiplicity one
d4 = build_root_system("D4")
mu = chain_weight(d4, (1, 2, 3))
print("D4 chain (1, 2, 3):", mu, "multiplicity", freudenthal_multiplicity(d4, d4.fundamental_weight(1), mu))
