"""Exact line-bundle cohomology on products of projective spaces.

Every number here is an exact integer: dimensions on a single factor come
from monomial counts, products combine factors, and exterior powers of
direct sums expand into explicit line bundles.
"""

from monadcert import LineBundleSum, ProductSpace, exterior_power, h_line, h_pn, h_sum

print("== single factor ==")
for d in (3, 0, -1, -3, -5):
    row = [h_pn(2, d, i) for i in range(3)]
    print(f"  O({d:>2}) on P^2: h^0..h^2 = {row}")

print()
print("== products combine factor by factor ==")
x = ProductSpace((1, 3))
print(f"  X = {x}, dim {x.dim}")
for deg in [(1, 1), (0, 0), (-2, -4), (-2, -2)]:
    dims = [h_line(x, deg, p) for p in range(x.dim + 1)]
    print(f"  O{deg}: h^0..h^{x.dim} = {dims}")
print("  the canonical bundle O(-2,-4) keeps exactly one class, at the top")

print()
print("== direct sums and twists ==")
surface = ProductSpace((1, 1))
g = LineBundleSum([((1, 1), 1), ((-2, -2), 2), ((0, 0), 1)])
print(f"  G = {g}, rank {g.rank}, c1 = {g.c1()}")
print(f"  G(-1,-1) = {g.twist((-1, -1))}")
print(f"  G^dual   = {g.dual()}")
print(f"  h^0({surface}, G) = {h_sum(surface, g, 0)}")

print()
print("== exterior powers expand into line bundles ==")
for q in range(g.rank + 1):
    lam = exterior_power(g, q)
    print(f"  Lambda^{q} G = {lam}  (rank {lam.rank})")
print("  ranks sum to 2^rank, one line bundle per subset")
