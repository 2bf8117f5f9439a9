"""The Weyl group of G2 and the two-variable period built from it.

Each of the twelve Weyl elements contributes one term: a rational factor from
the pairings of w(lambda) minus rho with the simple coroots, times a product of
xi ratios over the inversion set of w.
"""

from __future__ import annotations

from g2zeta import period, rootsystem

rs = rootsystem.build_g2()
print(rootsystem.format_table(rs))
print()

omega = period.build_period(rs)
print(period.format_period(omega))
print()

# the period is a meromorphic function of (z1, z2)
print("omega(2.3+0.1i, 0.7-0.4i) =", period.eval_period(omega, 2.3 + 0.1j, 0.7 - 0.4j))
