"""
Closures of a staircase ideal and the derivations that survive them
===================================================================

The ideal I = (x^10, x^8 y, x y^4, y^5) in Q[x, y] has three closures worth
comparing: itself, its Ratliff-Rush closure and its integral closure. Each
one is preserved by a different module of derivations, and the liftable
module of the normalized blow-up lands in between.
"""

from liftlog import parse_ring_and_ideal, rr_closure, integral_closure, tangent_module
from liftlog.valuations import sandwich_report

ctx, I = parse_ring_and_ideal("ring x, y; x^10, x^8*y, x*y^4, y^5")

# Ratliff-Rush: [I^(n+1) : I^n] settles down after a few steps
rr = rr_closure(I)
print("I          ", I)
print("Î          ", rr.closure, f"(stable from n = {rr.stabilized_at})")

# integral closure: lattice points of the Newton polyhedron
bar = integral_closure(I)
print("Ī          ", bar)
print()

# derivations preserving each ideal
for name, J in [("T(I)", I), ("T(Î)", rr.closure), ("T(Ī)", bar)]:
    print(f"{name:11s}", tangent_module(J))

# the liftable module, read off the Rees valuations (facets of the Newton polyhedron)
r = sandwich_report(I)
print()
print("Rees weights", [v.w for v, _ in r.rees])
print("L(I)       ", r.L)
print("chain T(I) ⊆ T(Î) ⊆ L ⊆ T(Ī):", r.chain_ok)
