"""Monads on squared products (P^n)^2 x (P^m)^2 x (P^l)^2.

Six coordinate blocks, each map entry a pure power of one coordinate, and
block partners cancel pairwise in the composite.  Per-entry degrees cannot
match the summand labels here; the report records that instead of hiding it.
"""

from monadcert import build_section4, display_summary, verify_monad

spec = build_section4(n=1, m=1, l=1, alpha=2, beta=1, gamma=1, k=1)

print(f"instance: {spec.instance_id}")
print(f"X = {spec.space}")
print(f"A = {spec.term_a}")
print("M =", str(spec.term_m))
print(f"C = {spec.term_c}")
print()

print("g row (coordinate ladders, u-entries squared since alpha = 2):")
print("  " + ", ".join(str(spec.map_g.entry(0, c)) for c in range(spec.map_g.ncols)))
print("f column (partner coordinates, signs arranged to cancel):")
print("  " + ", ".join(str(spec.map_f.entry(r, 0)) for r in range(spec.map_f.nrows)))
print()

report = verify_monad(spec)
print(f"composite zero: {report.composite_zero}")
print(f"g covered by witness family '{report.map_g.covering_family}', "
      f"f by '{report.map_f.covering_family}'")
print(f"per-entry degree consistency: {report.map_g.degree_consistent} (by design)")
for note in report.notes:
    print(f"note: {note}")
print(f"verdict: {'valid monad' if report.valid else 'INVALID'}")
print()

d = display_summary(spec)
print(f"E has rank {d.rank_e} = 2(n+m+l+2k), c1 = {d.c1_e}")
