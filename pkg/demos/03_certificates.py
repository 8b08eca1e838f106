#!/usr/bin/env python3
"""The inequality-chain certificates, shown at their equality boundaries.

Run: python demos/03_certificates.py
"""

from ekrlab import (
    Family,
    canonical_simplex_frame,
    cross_certificate,
    ekr_certificate,
    hilton_milner,
    simplex_min_index,
    simplex_witness,
    sqrt_product_inequality_check,
    star,
    star_frame_checks,
)

print("=" * 72)
print("  STAR RESIDUAL FRAME: scaled regular simplex, verified exactly")
print("=" * 72)
for n, k in ((7, 3), (9, 4), (11, 5)):
    rep = star_frame_checks(n, k)
    print(f"  ({n},{k}): |u|^2 = {rep.norm_sq},  <u_i,u_j> = {rep.cross} "
          f"= -|u|^2/(n-1): {'ok' if rep.simplex_identity_holds else 'FAIL'}")

print()
print("The geometry driving the witness step: any vector has inner product")
print("at most -|v|/(n-1) with some vector of a unit simplex frame.")
frame = canonical_simplex_frame(4)
for v in ([1.0, 0.0, 0.0], [0.3, -0.2, 0.9]):
    idx, value = simplex_min_index(v, frame)
    print(f"  v = {v}: min at frame vector {idx}, value {value:+.6f}")

print()
print("=" * 72)
print("  WITNESS INEQUALITY  min_i (deg(i) - ke/n) <= -sqrt(scaled F_1)")
print("=" * 72)
s = star(7, 3, 1)
w = simplex_witness(s)
print(f"  star(7,3,1): lhs = {w.lhs}, rhs^2 = {w.rhs_squared}, "
      f"equality = {w.equality}  (both sides are -10/7)")

print()
print("=" * 72)
print("  DEGREE DICHOTOMY CERTIFICATE")
print("=" * 72)
cert = ekr_certificate(s)
print(f"  star(7,3,1): e = {cert.e}, delta_1 = {cert.delta1}")
print(f"    F_1 = {cert.f1}; lower bound {cert.lower_bound_rhs}, "
      f"upper bound {cert.upper_bound_rhs} (chain is tight on stars)")
print(f"    dichotomy: {cert.dichotomy.value}; is_star: {cert.is_star}")

sub = Family.from_edges(7, 3, [e for e in s if e != (1, 2, 3)])
cert = ekr_certificate(sub)
print(f"  star minus one edge: delta_1 = {cert.delta1} < 5, so the upper")
print(f"    branch is inconclusive: upper bound = {cert.upper_bound_rhs}; "
      f"dichotomy = {cert.dichotomy.value}")

print()
print("=" * 72)
print("  CROSS-INTERSECTING PAIRS")
print("=" * 72)
cert = cross_certificate(s, s)
print(f"  star x star:   delta_1 product = {cert.delta1_b * cert.delta1_c} "
      f"= C(5,1)^2 (equality); mass bound equality = {cert.ineq10_equality}")
hm = hilton_milner(7, 3)
cert = cross_certificate(hm, hm)
print(f"  HM x HM:       delta_1 product = {cert.delta1_b * cert.delta1_c} <= 25; "
      f"mass bound holds = {cert.ineq10_holds}")

print()
print("Utility inequality used when splitting mixed radicals, checked by")
print("squaring twice with sign tracking:")
print(f"  sqrt(3*8) <= sqrt(4*9) - sqrt(1*1): "
      f"{sqrt_product_inequality_check(4, 1, 9, 1)}")
