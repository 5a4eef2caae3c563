"""The normal-bundle ledger: projections, elementary modifications, and
the balancedness certificate for odd-degree rational space curves.
"""

from bnkit import (
    SplitBundle,
    hh_restriction,
    modify,
    odd_degree_certificate,
    pointing_degree,
    projection_ledger,
)

print("Projection of a twisted cubic from one of its points maps it to a")
print("conic; the projection sequence for the normal bundle is balanced:")
seq = projection_ledger(3)
print(f"  sub O({seq.sub.degree}) -> N -> quot O({seq.quot.degree}),  total degree {seq.total_degree}")
print()

print("For higher degree the raw sequence is badly unbalanced:")
seq = projection_ledger(9)
print(f"  d = 9: sub O({seq.sub.degree}) vs quot O({seq.quot.degree})")
print()

print("Degenerating off 1-secant lines accrues positive modifications toward")
print("the pointing bundle (degree d or d+2 by the center's position):")
print(f"  pointing degree at a general point of a degree-7 curve: "
      f"{pointing_degree(7, 'on_curve_general')}")
n = SplitBundle((5, 5))
print(f"  one node pointing at the first summand: {n.degrees} -> "
      f"{hh_restriction(n, [0]).degrees}")
print(f"  elementary modification, minus sign: (2,1,1) -> "
      f"{modify(SplitBundle((2, 1, 1)), 0, '-', 1).degrees}")
print()

print("The two effects cancel exactly when the degree is odd: peeling")
print("(d-3)/2 secant lines and projecting the reduced curve yields a")
print("perfectly balanced sequence, certifying N = O(2d-1)^2.")
for d in (3, 5, 11, 99):
    c = odd_degree_certificate(d)
    print(f"  d = {d:3d}: peel {c.peels:2d} lines to degree {c.reduced_degree}, "
          f"sub = quot = {c.sub}, conclusion O({c.conclusion[0]})^2")
print()
print("Even degrees are refused: the statement is false for them (it already")
print("fails in characteristic 2).")
