"""
Sparse node sets and U'-quotients of S-varieties
================================================

"""

from horoquot import build_root_system
from horoquot.quotient_analysis import enumerate_sparse_sets, hv_report, is_sparse, s_variety_report

a3 = build_root_system("A3")

# {1, 3} fails because node 2 touches both
res = is_sparse(a3, {1, 3})
print("A3 {1,3} sparse?", res.sparse, res.witness)
print("sparse sets of A4:", enumerate_sparse_sets(build_root_system("A4")))

# the monoid generated by w1 and w3 in A3
rep = s_variety_report(a3, [a3.fundamental_weight(1), a3.fundamental_weight(3)])
print("dim X =", rep.dim_X, " dim X//U' =", rep.dim_quotient_U2)
print("polynomial:", rep.polynomial, " equidimensional:", rep.equidimensional)
print("witnesses:", rep.witnesses)

# a single weight: hypersurface degree counts how far from a polynomial ring we are
for lam in ((1, 0, 0), (1, 1, 0), (2, 0, 0), (1, 1, 1)):
    h = hv_report(a3, lam)
    print(lam, " ed =", h.ed, " dim =", h.dim_quotient, " hd =", h.hd)

# doubling generators changes the monoid but not the cone, so not the verdict
a2 = build_root_system("A2")
for gens in ([(1, 0)], [(2, 0)], [(2, 0), (3, 0)]):
    rep = s_variety_report(a2, gens)
    print(gens, " polynomial", rep.polynomial, " equidimensional", rep.equidimensional)
