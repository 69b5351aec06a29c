"""Walk through the smallest odd orthogonal modules.

Builds the 2-dimensional spinor module and the 3-dimensional vector
module of o(3), prints every nonzero generator entry, and confirms the
two striking small facts: the raising generator sends the primed basis
vector to half the plain one, and the primed-lowering operator of the
spinor module is identically zero.
"""

from gtrep import Operator, build_so, check_weight_so, enumerate_patterns_b
from gtrep.sorep import SoBasis, build_phi_minus


def show(rep, title):
    print("== %s  (dim %d) ==" % (title, rep.dim))
    for c, pat in enumerate(rep.patterns):
        print("  basis[%d]: sigma=%s primed=%s weight=%s"
              % (c, pat.sigma, [str(x) for x in pat.primed[-1]],
                 [str(x) for x in pat.weight()]))
    for slot in sorted(rep.gens):
        op = rep.gens[slot]
        if op:
            ent = ", ".join("(%d,%d)=%s" % (r, c, v)
                            for (r, c), v in op.entries_sorted())
            print("  F%s: %s" % (slot, ent))
    print()


spinor = build_so(("-1/2",))
show(spinor, "spinor module of o(3)")

print("raising applied to the primed vector:",
      spinor.gens[(0, 1)].column(1))
print("raising applied to the plain vector:  ",
      spinor.gens[(0, 1)].column(0))

lam = check_weight_so(("-1/2",))
basis = SoBasis(lam, enumerate_patterns_b(lam))
phi = build_phi_minus(basis, 1)
print("primed-lowering operator is zero:", phi == Operator(2))
print()

vector = build_so(("-1",))
show(vector, "vector module of o(3)")

big = build_so(("-1/2", "-1/2", "-1/2"))
print("rank 3 spinor module has dimension", big.dim)
