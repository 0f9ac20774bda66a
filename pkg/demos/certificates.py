"""Stability and simplicity certificates, including an honest failure.

Three stories: a band monad whose kernel is certified stable and whose
cohomology bundle is certified simple; a constructed middle term with a
positive summand where stability fails and the certificate hands back a
checkable witness twist; and a surface case where the simplicity chase
cannot close and the certificate says so instead of overclaiming.
"""

from monadcert import (
    LineBundleSum,
    ProductSpace,
    build_section3,
    custom_monad,
    exterior_power,
    h_sum,
    simplicity_certificate,
    stability_certificate,
)

print("== 1. certified stable and simple ==")
spec = build_section3(ProductSpace((1, 3)), 1)
stab = stability_certificate(spec)
print(f"instance {stab.instance_id}: kernel rank {stab.rank_t}, c1 {stab.c1_t}")
print(f"degree {stab.degree_t}, slope {stab.slope_t}, normalization k_E = {stab.k_e}")
print(f"checked q = {[q.q for q in stab.per_q]} over: {stab.twist_family}")
print(f"verdict: {stab.verdict}")

simp = simplicity_certificate(spec, stab)
print(f"twist by {simp.twist}; both vanishing steps forced: "
      f"{[s.forced for s in simp.steps]}")
print(f"{simp.chain}  ->  verdict: {simp.verdict}, h^0(E.E*) = {simp.h0_endo}")
print()

print("== 2. stability failure with a checkable witness ==")
x = ProductSpace((1, 1))
ce = custom_monad(
    "O11 counterexample",
    x,
    LineBundleSum([((-1, -1), 1)]),
    LineBundleSum([((1, 1), 1), ((-2, -2), 2), ((0, 0), 1)]),
    LineBundleSum([((1, 1), 1)]),
)
cert = stability_certificate(ce, polarization=(1, 1))
print(f"instance {cert.instance_id}: verdict {cert.verdict}")
for q in cert.per_q:
    if not q.passed:
        print(f"  q = {q.q}: twist B = {q.witness_twist} "
              f"meets subset sum t_S = {q.witness_profile}")
        lam = exterior_power(ce.term_m, q.q).twist(q.witness_twist)
        print(f"  recheck: h^0(Lambda^{q.q} M (B)) = {h_sum(x, lam, 0)} >= 1")
        break
print()

print("== 3. an honest gap instead of a false positive ==")
surface = build_section3(ProductSpace((1, 1)), 1)
stab2 = stability_certificate(surface)
simp2 = simplicity_certificate(surface, stab2)
print(f"instance {stab2.instance_id}: stability verdict {stab2.verdict}")
for step in simp2.steps:
    print(f"  p = {step.p}: h^p(middle) = {step.h_middle}, "
          f"h^(p+1)(first) = {step.h_first_next}, forced = {step.forced}")
print(f"simplicity verdict: {simp2.verdict} (h^1 blocks the chase on a surface)")
