"""Bialynicki-Birula cells of X_n and what their closures look like.

Run: python demos/cells.py
"""
from quadrics.bbcells import (
    bb_order, bcell_conjecture_check, cells, default_admissible, flow_oracle, sigma,
    stratification_witness, tau,
)
from quadrics.gkm import tangent_weights
from quadrics.io import parse_degenerate_involution as P

pi = P("(68)|(25)(4)(9)|(13)(7)")
print(f"[{pi}] flows to [{tau(pi)}]")
print(f"  checked against the limit with weights {default_admissible(9)}: [{flow_oracle(pi, default_admissible(9))}]")
print(f"  dense orbit of that cell: [{sigma(tau(pi))}]")

print("\nCells for n = 3 (fixed point, dimension, members):")
for c in cells(3):
    print(f"  [{c.fixed_point}]  {c.dimension}  " + " ".join(f"[{m}]" for m in c.members))

bb = bb_order(3)
print(f"\nBB order: {len(bb)} cells, {len(bb.covers())} covers")

w = stratification_witness(3)
print(f"closure([{w.cell_a}]) meets cell [{w.cell_b}] in {[str(x) for x in w.intersection]}"
      f" but misses {[str(x) for x in w.missing]}")

t = tangent_weights(P("1|32"))
print(f"\nTangent weights at [1|32]: h={t.horizontal} v={t.vertical} n={t.normal}")

for n in range(2, 6):
    rep = bcell_conjecture_check(n)
    note = "" if rep.ok else f", fails on [{rep.failing_interval[0]}, {rep.failing_interval[1]}]"
    print(f"dense orbits of cells, n = {n}: graded with max and min: {rep.ok}{note}")
