"""Closure order on Borel orbits of one G-orbit, and why it differs from S_n.

Run: python demos/bruhat_orders.py
"""
from collections import Counter

from quadrics.bruhat import (
    bruhat_poset, compare_covers, cor_w1_witnesses, covers_by_theorem, full_poset, induced_order,
)
from quadrics.io import parse_degenerate_involution as P


def levels(p):
    return [c for _, c in sorted(Counter(p.rank().values()).items())]


geo = bruhat_poset((3, 1))
print(f"mu = (3,1): {len(geo)} orbits, levels {levels(geo)}, graded: {geo.is_graded()[0]}")

# Same 16 words ordered by Bruhat order on S_4 instead.
ind = induced_order((3, 1))
graded, (lo, hi) = ind.is_graded()
print(f"induced from S_4: graded: {graded}; chains of two lengths in [{lo}, {hi}]")
for x in sorted(ind.interval(lo, hi), key=str):
    print("   ", x)

full = full_poset(3)
print(f"\nAll of X_3: {len(full)} orbits, levels {levels(full)}")

print("\nCovered by [21|3]:", sorted(map(str, covers_by_theorem(P("21|3")))))
rep = compare_covers(4)
print("cover description vs Hasse diagram, n = 4:", "agree" if rep.ok else "\n".join(rep.lines()))

# A cover needs a factorization of *some* element of W^{-1}, not every one.
lower, upper = P("3|124"), P("1|324")
wit = cor_w1_witnesses(lower, upper)
for w, found in sorted(wit.items()):
    print(f"  {''.join(map(str, w))}: {len(found)} factorizations")
