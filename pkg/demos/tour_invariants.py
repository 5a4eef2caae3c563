"""A tour of the closed-form invariants.

Walks through the rho-calculus on a handful of classical cases: where
line bundles with many sections live, how many there are when the count
is finite, and what the dimension counts predict for embedded curves.
"""

from bnkit import (
    chi_pullback_tangent,
    count_grd,
    hilbert_function,
    interpolation_points,
    rho,
    rho_k,
    smrc_expected_dim,
)

print("The Brill-Noether number rho(g, r, d) = g - (r+1)(g-d+r) predicts the")
print("dimension of the space of degree-d maps to P^r from a general genus-g curve.")
print()
print(f"  rho(4, 1, 3)  = {rho(4, 1, 3)}   (finitely many g^1_3 on a genus-4 curve)")
print(f"  rho(8, 2, 7)  = {rho(8, 2, 7)}  (no plane septics from a general genus-8 curve)")
print(f"  rho(12, 1, 3) = {rho(12, 1, 3)}  (trigonal curves of genus 12 are codimension 8)")
print()

print("When rho = 0 the count of linear series is a product formula, equal to")
print("the number of standard Young tableaux on an (r+1) x (g-d+r) rectangle:")
for g, r, d in [(4, 1, 3), (6, 1, 4), (3, 2, 4), (8, 1, 5)]:
    print(f"  N({g}, {r}, {d}) = {count_grd(g, r, d)}")
print()

print("On special curves the prediction is refined by the gonality k:")
print(f"  rho_k(8, 2, 7, k=4)  = {rho_k(8, 2, 7, 4)}   -> a 4-gonal genus-8 curve")
print("                           carries finitely many g^2_7 despite rho = -1")
print(f"  rho_k(12, 2, 7, k=3) = {rho_k(12, 2, 7, 3)}   -> a trigonal genus-12 curve")
print("                           carries a whole curve of them")
print()

print("Embedded invariants of a general Brill-Noether curve in P^r:")
print(f"  chi of the restricted tangent bundle at (2, 3, 5): {chi_pullback_tangent(2, 3, 5)}")
print(f"  quadrics through the degree-5 genus-2 space curve: "
      f"{10 - hilbert_function(2, 3, 5, 2)} (Hilbert function {hilbert_function(2, 3, 5, 2)})")
print(f"  expected dim of the maximal-rank degeneracy locus at (13, 5, 16), k=2: "
      f"{smrc_expected_dim(13, 5, 16, 2)}")
print()

print("Interpolation: how many general points does such a curve pass through?")
for g, r, d in [(0, 3, 3), (2, 3, 5), (6, 5, 10)]:
    rep = interpolation_points(g, r, d)
    note = "exceptional!" if rep.is_exception else "as predicted"
    count = rep.count if rep.count is not None else "below formula"
    print(f"  ({g}, {r}, {d}): formula {rep.formula_value}, actual {count}  [{note}]")
