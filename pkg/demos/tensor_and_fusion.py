"""
Tensor products and fusion rules
================================

Klimyk decompositions, the level truncation for a charge of level one, and
the affine Weyl folding that handles general charges.
"""

from liefusion import (
    LAMBDA4, Weight, admissible_set, build, central_charge, coset_defect, decompose, dim,
    fusion_closure, kac_walton, virasoro_c,
)

F4 = build("F4")

###############################################################################
# (0010) x (0010) has 14 distinct components; multiplicities times
# dimensions add back up to 273^2.

d = decompose(F4, Weight(0, 0, 1, 0), Weight(0, 0, 1, 0))
for nu, m in d.components.items():
    print(f"{m} x {nu} (dim {dim(F4, nu)})")
print("total", d.total_dim(F4), "=", 273 ** 2)

###############################################################################
# At level l only weights with (lam|theta) <= l survive. Repeated fusion with
# lambda_4 reaches all of them.

for l in (1, 2, 3):
    P = admissible_set(F4, l)
    Q = fusion_closure(F4, l, [LAMBDA4])
    print(f"level {l}: {len(Q)} of {len(P)} reached:", *Q)

###############################################################################
# For sl2 the fusion ring is the familiar truncated Clebsch-Gordan rule.

A1 = build("A1")
k = 3
for a in range(k + 1):
    row = [sorted(kac_walton(A1, k, Weight(a), Weight(b)).items()) for b in range(k + 1)]
    print(a, row)

###############################################################################
# Central charges of conformal embeddings. At level 1 the subalgebras exhaust
# the central charge; at level 2 a Virasoro piece is left over.

A1, C3, G2 = build("A1"), build("C3"), build("G2")
print("c(F4, 1) =", central_charge(F4, 1))
print("F4 level 1 defect:", coset_defect((F4, 1), [(A1, 1), (C3, 1)]))
print("G2 level 1 defect:", coset_defect((G2, 1), [(A1, 3), (A1, 1)]))
leftover = coset_defect((F4, 2), [(A1, 2), (C3, 2)])
m = next(m for m in range(2, 100) if virasoro_c(m) == leftover)
print("F4 level 2 leftover:", leftover, "= minimal model m =", m)
