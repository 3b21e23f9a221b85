"""Empirical order check of the embedded Runge-Kutta schemes.

The 11-stage scheme of Cooper and Verner is embedded as literal
coefficients; nothing stops a typo in a tableau from silently degrading
it to low order, so the order is measured rather than trusted: on
y' = y the endpoint error must shrink by ~2**8 when the step halves.
"""

import math

from powerlaw_blasius import CLASSIC_RK4, COOPER_VERNER_8, GridSpec, integrate

rhs = lambda t, y: (y[0],)

for tableau, name in ((COOPER_VERNER_8, "Cooper-Verner 8"), (CLASSIC_RK4, "classical RK4")):
    print(f"{name} (declared order {tableau.declared_order}, {tableau.stage_count} stages)")
    previous = None
    for step in (0.1, 0.05, 0.025):
        _, states = integrate(rhs, tableau, GridSpec(step, 1.0), (1.0,))
        error = abs(states[-1, 0] - math.e)
        note = "" if previous is None else f"  ratio {previous / error:7.1f} ~ 2**{math.log2(previous / error):.2f}"
        print(f"  h = {step:<5} error = {error:.3e}{note}")
        previous = error
    print()

print("the 8th-order ratio stays near 256 until the error reaches the")
print("rounding floor; that empirical slope is what the tests pin.")
