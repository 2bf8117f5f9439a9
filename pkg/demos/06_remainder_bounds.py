"""Remainder terms and the bounds that keep Z1, Z2 from vanishing.

Right of the critical line Z_i factors as a leading product times a bracket
1 - R1 - ... - R5. Where the |R_i| sum to less than one, Z_i cannot vanish.
Far to the left the dominant remainder of f_i settles to a constant.
"""

from __future__ import annotations

import numpy as np

from g2zeta import rhverify, zeta
from g2zeta.zeta import FunctionId, RemainderFamily

for kind in (FunctionId.Z1, FunctionId.Z2):
    ok, measured, tol = rhverify.verify_right_plane(kind, n_re=200, n_im=120)
    maxes = ", ".join(f"{m:.4f}" for m in measured["max_abs_R_at_re_ge_20"])
    print(f"{kind.value}: max |R_i| for Re s >= 20: {maxes}   stated bounds {tol['bounds']}")
    print(f"     max of sum |R_i| on [10, 40]: {measured['max_sum']:.4f}")

ts = np.linspace(-3000, 3000, 241)
for fid, fam in ((FunctionId.F1, RemainderFamily.F1_LEFT_R), (FunctionId.F2, RemainderFamily.F2_LEFT_R)):
    peak = float(np.max(np.abs(zeta.eval_remainder(fam, 2, -2000 + 1j * ts))))
    print(f"{fid.value}: far-left |R2| peak {peak:.5f}, closed form {zeta.asymptotic_left_constant(fid):.5f}")

print("chi ratio bound:", rhverify.check_chi_ratio()[1])
