"""
A squarefree quadratic Groebner basis
=====================================

Write down the explicit binomials for the poset, check them with
Buchberger's criterion under a few compatible orders and read off the
initial ideal.
"""

from csym_order.fixtures import example_poset
from csym_order.toric import (PosetRing, binomial_str, buchberger_verify, canonical_order,
                              hibi_csym_basis, initial_ideal_minimal_generators,
                              random_compatible_order)

p = example_poset()
ring = PosetRing.of(p)
print(ring.nvars, "variables")

order = canonical_order(p)
basis = [order.mark(b.lead, b.trail) for b in hibi_csym_basis(p, ring)]
for b in basis[:5]:
    print("  ", binomial_str(b, ring.variable_name))
print("  ...", len(basis), "binomials")

check = buchberger_verify(basis, order)
print("Groebner basis:", check.is_groebner, "after", check.pairs_checked, "S-pairs")

init = initial_ideal_minimal_generators(basis, order)
print(len(init.generators), "minimal generators; squarefree", init.all_squarefree,
      "quadratic", init.all_quadratic)

# any linear extension that keeps the order constraints works too
for seed in range(3):
    o = random_compatible_order(p, seed)
    marked = [o.mark(b.lead, b.trail) for b in basis]
    print("seed", seed, buchberger_verify(marked, o).is_groebner,
          len(initial_ideal_minimal_generators(marked, o).generators))
