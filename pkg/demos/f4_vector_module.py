"""
The 26-dimensional module of F4
===============================

Root data, the weight system of L(lambda_4), and a look at its
two-dimensional zero weight space built from explicit matrices.
"""

from liefusion import build, weight_system, Weight
from liefusion.reduction import group_a_roots, group_b_roots
from liefusion import repbuilder

F4 = build("F4")
print(F4.lie_type, "dim", F4.dimension, "h^vee", F4.dual_coxeter)
print("simple roots:", *F4.simple_roots)
print("highest root:", F4.highest_root)

###############################################################################
# Short positive roots split into two groups of six: those orthogonal to the
# highest root and the rest.

print("orthogonal to theta:", *group_a_roots())
print("not orthogonal:     ", *group_b_roots())

###############################################################################
# Freudenthal gives every multiplicity. Only the zero weight is degenerate.

ws = weight_system(F4, Weight(0, 0, 0, 1))
print(ws.total_dim, "dimensions,", len(ws), "weights")
for mu, m in sorted(ws.mults.items()):
    print("  dominant", mu, "mult", m)

###############################################################################
# Now build the module itself: E and F matrices for every root, a unitary
# form, and an orthogonal basis in each weight space.

M = repbuilder.lambda4_module()
print("explicit module of dimension", M.dimension)
print("commutation defects:", repbuilder.commutation_defects(M))
print("adjointness defects:", repbuilder.adjointness_defects(M))

z = repbuilder.zero_weight_report(M)
print("Gram determinants:", z.det_34, z.det_35)
print("squared cosines:  ", z.cos2_34, z.cos2_35)
print("norms and cross pairing:", *map(str, repbuilder.norm_pairings(M)))
