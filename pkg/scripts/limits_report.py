#!/usr/bin/env python3
"""Print convergence tables for the limit and asymptotic claims.

Shows how fast the reduced forms approach their limits:
  * E(1, n-1) -> nu(1)            (the integral analogue at order n)
  * e_{n-1}(y) -> e^y             (the coefficient analogue, reduced form)
  * Q(z, z) -> 1/2                (the central incomplete-gamma ratio)
  * e_{z-1}(y) vs y^(z-1)/Gamma(z)  (large-weight asymptote)

Usage: python scripts/limits_report.py
"""

import math

from cpoch.gammafns import e_partial_sum, log_e_partial, regularized_q
from cpoch.rho import E_quadrature, nu

nu1 = nu(1.0, 1e-13)
print(f"nu(1) = {nu1:.13f}")
print("\n n    E(1, n-1)        gap to nu(1)")
for n in (3, 5, 8, 12, 18, 25, 30):
    e = E_quadrature(1.0, n - 1.0, 1e-13)
    print(f"{n:3d}  {e:.13f}  {nu1 - e:.3e}")

print("\n n    e_(n-1)(2)        gap to e^2")
for n in (5, 10, 15, 20, 30, 40, 60):
    e = e_partial_sum(n, 2.0)
    print(f"{n:3d}  {e:.15f}  {math.exp(2.0) - e:.3e}")

print("\n z    Q(z,z)          gap to 1/2     sqrt(z)*gap")
for z in (10.0, 40.0, 160.0, 640.0, 2560.0):
    q = regularized_q(z, z, 1e-14).value
    gap = 0.5 - q
    print(f"{z:7.0f}  {q:.10f}  {gap:.4e}  {gap * math.sqrt(z):.6f}")

print("\n y    e_5(y) / (y^5/5!)   (large-weight asymptote at order 6)")
for y in (20.0, 50.0, 100.0, 200.0, 400.0):
    ratio = math.exp(log_e_partial(6.0, y) - (5.0 * math.log(y) - math.lgamma(6.0)))
    print(f"{y:6.0f}  {ratio:.8f}")
