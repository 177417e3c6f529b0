"""
A Weyl-group witness for the codimension of the null-cone
=========================================================

"""

from horoquot import build_root_system
from horoquot.quotient_analysis import HypothesisError, nullcone_codim2_witness

for name, lam in (("A2", (1, 0)), ("B2", (0, 1)), ("G2", (1, 1)), ("D4", (0, 1, 0, 0))):
    rs = build_root_system(name)
    wit = nullcone_codim2_witness(rs, lam)
    print(f"{name} lam={lam}: w = s{wit.element.word}, w(lam) = {wit.image}, certified {wit.certified}")

# on an A1 factor U' is trivial and no witness exists
try:
    nullcone_codim2_witness(build_root_system("A1"), (1,))
except HypothesisError as err:
    print("A1:", err)
