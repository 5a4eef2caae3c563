"""Splitting types and k-core fillings: Brill-Noether theory for curves
with a marked map to the line.

The running specimen is the general trigonal curve of genus 5, whose
space of degree-4 pencils famously breaks into two components.
"""

from bnkit import (
    count_k_fillings,
    hbn_predicates,
    k_filling_witnesses,
    majorizes,
    maximal_splitting_types,
    rd_from_splitting,
    rho_splitting,
)

g = 5
print("A line bundle L on a trigonal curve pushes forward to a rank-3 bundle")
print("on the line, which splits; the splitting type refines (r, d).")
print()
for e in [(-2, -2, 1), (-3, 0, 0), (-3, -1, 1)]:
    r, d = rd_from_splitting(g, e)
    print(f"  type {e}: (r, d) = ({r}, {d}), expected dim {rho_splitting(g, e)}")
print()
print("So W^1_4 of the trigonal genus-5 curve has two 1-dimensional components,")
print("meeting in the 0-dimensional stratum (-3, -1, 1).  Majorization (prefix")
print("sums) is exactly the containment order:")
print(f"  (-3,-1,1) inside (-2,-2,1):", bool(majorizes((-2, -2, 1), (-3, -1, 1))))
print(f"  (-3,-1,1) inside (-3, 0,0):", bool(majorizes((-3, 0, 0), (-3, -1, 1))))
print()

print("Geometry read off the type: every bundle in the (-2,-2,1) component has")
print("a basepoint, since the second-largest part is negative:")
print(f"  predicates(-2,-2,1): {hbn_predicates((-2, -2, 1))}")
print()

print("For a 4-gonal genus-8 curve, the maximal splitting types with")
print("(r, d) = (2, 7) are produced in closed form:")
for w in maximal_splitting_types(8, 2, 7, 4):
    print(f"  {w}  with expected dim {rho_splitting(8, w)}")
print()

print("When a splitting stratum is 0-dimensional, its points are counted by")
print("k-fillings of a k-core.  The two 3-fillings of the 8-box 3-core")
print("(4,2,1,1) with symbols 1..5:")
print(f"  count = {count_k_fillings((4, 2, 1, 1), 3, 5)}")
for w in k_filling_witnesses((4, 2, 1, 1), 3, 5):
    final, steps = w.replay()
    print(f"  residue word {w}: boxes added per symbol {steps}")
