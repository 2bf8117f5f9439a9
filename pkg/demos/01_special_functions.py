"""Gamma, zeta and the completed zeta xi, evaluated in double precision.

Everything downstream is built from chi(s) = s(s-1) xi(s), which is entire and
symmetric under s -> 1-s. Ratios of chi are formed in log space, so factors that
individually overflow can still be divided.
"""

from __future__ import annotations

import numpy as np

from g2zeta import specialfn

# Gamma via Lanczos, zeta via Euler-Maclaurin
print("Gamma(1/2)^2 =", specialfn.complex_gamma(0.5) ** 2, "(pi =", np.pi, ")")
print("zeta(2)      =", specialfn.complex_zeta(2.0), "(pi^2/6 =", np.pi**2 / 6, ")")
print("zeta(-1)     =", specialfn.complex_zeta(-1.0))

# xi is symmetric and real on the critical line
s = 0.3 + 7.0j
print("xi(s) - xi(1-s) =", specialfn.xi(s) - specialfn.xi(1 - s))
t = np.linspace(13.5, 14.5, 5)
print("xi(1/2+it) for t near the first zero:", np.round(specialfn.xi_critical_real(t), 8))

# chi is entire: chi(0) = chi(1) = 1
print("chi(0), chi(1) =", specialfn.chi(0.0), specialfn.chi(1.0))

# far out, chi itself overflows but the ratio does not
big = 300 + 5000j
print("|chi(2s-1)/chi(2s)| at s = 300+5000i:", abs(specialfn.chi_ratio(2 * big - 1, 2 * big)))
