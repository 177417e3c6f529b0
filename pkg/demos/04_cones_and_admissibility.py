"""
Cones, duality and admissible one-parameter subgroups
=====================================================

"""

from horoquot import build_root_system
from horoquot.cones import cone_from, dual_cone
from horoquot.quotient_analysis import admissibility_cone, hm_verdict, nonsimple_root_cone

# a plain cone in Q^2 with the dot product
c = cone_from([(1, 0), (1, 1), (2, 1)])
print("rays:", c.rays, " facets:", c.facets)
print("dual rays:", dual_cone(c).rays)

# for a root system, weights pair with coweights; the dual of the cone spanned by
# all w_i and w_i - alpha_i is the cone of non-simple positive roots
for name in ("B3", "D4", "G2"):
    rs = build_root_system(name)
    dual = dual_cone(admissibility_cone(rs), rs)
    print(name, dual == nonsimple_root_cone(rs, "coweight"), dual.tagged_rays())

# admissibility is strict positivity of all 2r pairings
g2 = build_root_system("G2")
for tau in ((1, 1), (1, 0), (2, 3)):
    v = hm_verdict(g2, tau)
    print("G2 tau =", tau, " admissible:", v.admissible, " pairings:", [str(p) for p in v.pairings])

# A2 sits outside the hypotheses: the pairing with w1 - alpha_1 vanishes
print("A2:", hm_verdict(build_root_system("A2"), (1, 1)))
