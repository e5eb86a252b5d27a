"""
A configuration that is not normal
==================================

A 0/1 matrix that spans Z^7 but is not unimodular.  Its centrally
symmetric polytope misses a lattice point in the third dilate, and the
toric ideal needs a cubic generator.
"""

import numpy as np

from csym_order.fixtures import negative_configuration
from csym_order.lattice import centrally_symmetric, is_unimodular, lattice_spans
from csym_order.polytope import csym_polytope, is_normal_up_to
from csym_order.toric import MonomialOrder, binomial_str, quadratic_generation_test

a = negative_configuration()
print(np.array(a.entries))
print("spans Z^7:", lattice_spans(a).spans_full_lattice)
r = is_unimodular(a)
print("unimodular:", r.unimodular, " witness minor", r.witness_minor)

poly = csym_polytope(a)
n = is_normal_up_to(poly, 3)
print("normal up to t=3:", n.normal_up_to_T, " witness", n.witness)

# the facet offsets are all 1 for this one
print("facet offsets", sorted(set(poly.facets.offsets.tolist())), "over", len(poly.facets.offsets), "facets")

apm = centrally_symmetric(a)
q = quadratic_generation_test(apm, MonomialOrder(range(apm.cols)))
print(q.quadratic_count, "quadrics,", q.cubic_count, "cubic fiber moves")
print("cubic witness:", binomial_str(q.witness, lambda v: f"v{v}"))
