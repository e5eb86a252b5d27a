"""
Posets, ideals and the order matrix
===================================

Build a five-element poset from its cover relations, list its ideals and
look at the 0/1 matrix whose columns are the ideal indicators.
"""

from csym_order.poset import from_cover_relations, enumerate_ideals, has_three_antichain
from csym_order.lattice import order_matrix, centrally_symmetric, lattice_spans, is_unimodular

# covers a < b as pairs
p = from_cover_relations(5, [(1, 3), (2, 3), (2, 4), (4, 5)])
ideals = enumerate_ideals(p)
print(len(ideals), "ideals")
for I in ideals:
    print("  ", sorted(I))

a = order_matrix(p)
for row in a.entries:
    print(" ".join(str(x) for x in row))

# [0 | A | -A] with a row of ones on the bottom
apm = centrally_symmetric(a)
print("configuration shape", apm.shape)

print("spans Z^d:", lattice_spans(a).spans_full_lattice)

# no 3-element antichain here, so the order matrix is unimodular
print("3-antichain:", has_three_antichain(p), " unimodular:", is_unimodular(a).unimodular)
