"""
Derivations of numerical semigroup rings
========================================

In Q[t^S] a derivation t^k ∂t is determined by its order k, so the modules of
the two-variable story become sets of integers. With S = <4, 5, 6, 7> and
I = (t^4, t^5) the powers of I eventually agree with those of the maximal
ideal, which is therefore the Ratliff-Rush closure.
"""

from liftlog.semigroup import (NumericalSemigroup, SemigroupIdeal, sgr_power, sgr_quotient,
                               sgr_rr_report, sgr_tangent, sgr_tangent_ring)

S = NumericalSemigroup((4, 5, 6, 7))
I = SemigroupIdeal(S, (4, 5))
m = SemigroupIdeal.maximal(S)
print("S", S, "Frobenius number", S.frobenius)

for n in range(1, 4):
    print(f"[I^{n + 1} : I^{n}] =", sgr_quotient(sgr_power(I, n + 1), sgr_power(I, n)))
r = sgr_rr_report(I)
print("Ratliff-Rush closure", r.closure, "power check", r.power_check_passed)
print()

print("T(I):", sgr_tangent(I).module_str())
print("T(m):", sgr_tangent(m).module_str())

# the cusp: no derivation of order 0 survives, so the ring is singular
cusp = NumericalSemigroup((2, 3))
print("cusp Q[t^2, t^3]:", sgr_tangent_ring(cusp).module_str())
