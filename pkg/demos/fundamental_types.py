"""
Reducing intertwiner types to nine fundamental ones
===================================================

Every F4 type with charge lambda_4 and source and target at the top level
reduces, by subtracting a common dominant shift, to one of nine small types.
"""

from itertools import product

from liefusion import LAMBDA4, Weight, build, fundamental_table, hom_dim, reduce_to_fundamental
from liefusion.reduction import verify_compression_cases

F4 = build("F4")

for t in fundamental_table():
    print(f"({t.id}) {t.nu0} over {t.mu0}, level {t.level}: N = {t.rule}")

###############################################################################
# Sweep all pairs with labels up to 2 and count where each lands.

counts = {}
for l in range(1, 5):
    box = [Weight(c) for c in product(range(3), repeat=4) if F4.level(Weight(c)) == l]
    for mu in box:
        for nu in box:
            if hom_dim(F4, LAMBDA4, mu, nu):
                c = reduce_to_fundamental(l, mu, nu)
                counts[c.target] = counts.get(c.target, 0) + 1
print(dict(sorted(counts.items())))

###############################################################################
# The four cases at levels 3 and 4 that need the compression argument. Two
# are settled by a sign check, two by a vector in the explicit module.

summary = verify_compression_cases()
for case, r in summary.reports.items():
    print(f"case {case}: k={r.k} alpha={r.alpha} eta={r.eta} via ({r.via}) -> {r.passed}")
print("annihilators are distinct lines:", summary.annihilators_distinct)
