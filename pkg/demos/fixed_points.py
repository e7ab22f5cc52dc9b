"""Counting torus fixed points of the complete quadrics X_n.

Run: python demos/fixed_points.py
"""
from quadrics.degeninv import (
    count_barred, enumerate_barred, enumerate_degenerate_involutions, mu_length, quadric_of,
    sorted_word,
)
from quadrics.io import parse_degenerate_involution as P
from quadrics.permgroup import length

# A degenerate involution is a permutation cut into blocks, each block an
# involution of its own letters. It names a Borel orbit.
pi = P("26|8351|7|94")
print(f"[{pi}] has composition {pi.mu}")
q = quadric_of(pi)
for flag, poly in zip(q.flag_labels(), q.polynomials()):
    print(f"  {flag:>12}  {poly}")

# Orbit dimension drops by the mu-length.
pi = P("5326|41")
w = sorted_word(pi)
print(f"\n[{pi}]: sorted word {''.join(map(str, w))}, length {length(w)}, mu-length {mu_length(pi)}")

print("\n n  orbits  fixed points (recurrence / closed form / listed)")
for n in range(1, 9):
    rec, closed = count_barred(n)
    orbits = len(enumerate_degenerate_involutions(n)) if n <= 5 else "-"
    print(f"{n:2}  {orbits!s:>6}  {rec} / {closed} / {len(enumerate_barred(n))}")

print("\nFixed points for n = 3:", " ".join(f"[{g}]" for g in enumerate_barred(3)))
