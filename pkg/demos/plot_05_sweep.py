"""
Every small poset
=================

Classify all labeled posets on up to three elements and tabulate the
delta-vectors.  ``csym-order sweep --dmax 4`` runs the full 242 in well
under a minute.
"""

from collections import Counter

from csym_order.report import sweep

result = sweep(dmax=3)
print(result["summary"])
print("all pass:", result["all_pass"])

deltas = Counter(tuple(r["delta"]) for r in result["rows"])
for delta, k in sorted(deltas.items()):
    print(f"{k:3d}  {list(delta)}")
