"""
A weighted valuation and the chart that realizes it
===================================================

The monomial valuation with ν(x) = 4, ν(y) = 9 is the pullback of the weight
(4, 1) through x -> x, y -> x^2 s. A derivation keeps ν(∂f) >= ν(f) on the
maximal ideal exactly when its lift keeps the target weight, which lets the
chart certify every generator of the log module.
"""

from liftlog import GradedDerivation, MonomialMap, RingContext, log_module
from liftlog.charts import lifts_for_weight, pullback_weight
from liftlog.monomial import MonomialIdeal
from liftlog.valuations import WeightValuation

XY = RingContext(("x", "y"))
chart = MonomialMap(XY, RingContext(("x", "s")), ((1, 0), (2, 1)))
print("chart       ", chart)
print("pulled back ", pullback_weight(chart, (4, 1)).w)

M = log_module(WeightValuation(XY, (4, 9)), MonomialIdeal.maximal(XY))
print("log module  ", M)

# each generator, and the nearby multiples of ∂y, checked against the lift
for g in M.generators:
    print(f"  {g.format(XY):8s} lifts: {lifts_for_weight(chart, g, (4, 1))}")
for k in range(4):
    d = GradedDerivation.monomial((k, 0), 1)
    print(f"  {d.format(XY):8s} lifts: {lifts_for_weight(chart, d, (4, 1))}")
