#!/usr/bin/env python3
"""Tour of the named families: sizes, degree tables, intersection structure.

Run: python demos/01_constructions_tour.py
"""

from ekrlab import (
    binomial,
    complete,
    erdos_extremal,
    fano,
    hilton_milner,
    is_intersecting,
    min_degree,
    random_halved,
    remark_family,
    star,
    vertex_degrees,
)


def describe(name, fam):
    degs = vertex_degrees(fam)
    print(f"  {name:<24} n={fam.n} k={fam.k}  e={fam.edge_count:<4} "
          f"delta_1={min(degs) if degs else 0:<3} "
          f"intersecting={'yes' if is_intersecting(fam) else 'no'}")


print("=" * 72)
print("  NAMED FAMILIES")
print("=" * 72)

describe("star(7,3,1)", star(7, 3, 1))
describe("hilton_milner(7,3)", hilton_milner(7, 3))
describe("remark_family()", remark_family())
describe("random_halved(3, 42)", random_halved(3, 42))
describe("erdos_extremal(9,2,3,1)", erdos_extremal(9, 2, 3, 1))
describe("erdos_extremal(12,3,3,1)", erdos_extremal(12, 3, 3, 1))
describe("complete(6,3)", complete(6, 3))
describe("fano()", fano())

print()
print("The star maximizes the minimum degree among intersecting families")
print(f"(delta_1 = C(n-2,k-2) = {binomial(5, 1)} at (7,3)); the blocker family")
print("hilton_milner(7,3) is the extremal family with no common vertex:")
hm = hilton_milner(7, 3)
print(f"  e(HM) = {hm.edge_count} = 1 + C(6,2) - C(3,2);"
      f"  delta_1(HM) = {min_degree(hm, 1)} = C(5,1) - C(2,1)")

print()
print("Degree table of the 5-regular 10-edge family on 6 vertices (n = 2k):")
fam = remark_family()
for v, d in enumerate(vertex_degrees(fam), start=1):
    print(f"  vertex {v}: degree {d}")
print(f"Every degree exceeds C(n-2,k-2) = {binomial(4, 1)}, yet the family is")
print("not a star: the degree dichotomy genuinely needs n >= 2k+1.")

print()
print("Halved families on [2k] (one k-set per complementary pair) are always")
print("intersecting; measured minimum degrees over seeds 0..19:")
print(" ", [min_degree(random_halved(3, seed), 1) for seed in range(20)])
