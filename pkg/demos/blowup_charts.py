"""
Lifting derivations through a blow-up chart
===========================================

The chart y1 = x1, y2 = x1^n x2 of an iterated blow-up of the origin in the
plane is ramified along x1 = 0 with weights (1, n). A derivation of Q[y1, y2]
lifts to the chart exactly when it does not lower that weight, which here
means y1^n ∂y2 is the first multiple of ∂y2 to make it.
"""

from liftlog import GradedDerivation, MonomialMap, RingContext, chart_liftable, direct_lift, lifts_regularly

Y = RingContext(("y1", "y2"))
X = RingContext(("x1", "x2"))

for n in range(1, 5):
    chart = MonomialMap(Y, X, ((1, 0), (n, 1)))
    print(f"n = {n}: {chart}")
    print("   liftable:", chart_liftable(chart, ["x1"]))

# the lift itself, computed upstairs with Laurent monomials
chart = MonomialMap(Y, X, ((1, 0), (3, 1)))
print()
for k in range(5):
    d = GradedDerivation.monomial((k, 0), 1)
    lifted = direct_lift(chart, d)
    verdict = "regular" if lifts_regularly(chart, d, ["x1"]) else "pole along x1"
    print(f"{d.format(Y):8s} -> {lifted.values_str():28s} {verdict}")
