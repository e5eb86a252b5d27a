"""
Ehrhart counts and delta-vectors
================================

Count lattice points in dilates of the centrally symmetric polytope, then
compare antichains with their closed forms.
"""

import numpy as np

from csym_order.fixtures import example_poset
from csym_order.lattice import order_matrix
from csym_order.poset import antichain
from csym_order.polytope import (antichain_closed_forms, csym_polytope, ehrhart_delta,
                                 eulerian_row, is_fano, is_gorenstein_fano, order_polytope)

p = example_poset()
poly = csym_polytope(order_matrix(p))
print(len(poly.facets.offsets), "facets, offsets", np.unique(poly.facets.offsets))

e = ehrhart_delta(poly)
print("counts", e.counts)
print("delta  ", e.delta)

# Fano with all offsets 1, so the dual is a lattice polytope as well
print("Fano", is_fano(poly), " Gorenstein", is_gorenstein_fano(poly).gorenstein)

# the order polytope of a non-pure poset has an asymmetric delta
print("O(P) delta", ehrhart_delta(order_polytope(p)).delta)

# antichains: counts are (t+1)^(d+1) - t^(d+1), delta is an Eulerian row
for d in range(1, 5):
    q = csym_polytope(order_matrix(antichain(d)))
    ours = ehrhart_delta(q)
    forms = antichain_closed_forms(d, 1)
    print(d, ours.delta, eulerian_row(d + 1), ours.counts[1], forms.point_count)
