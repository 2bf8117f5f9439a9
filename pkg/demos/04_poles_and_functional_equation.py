"""Poles, the functional equation, and the entire functions Z1, Z2.

The long zeta has simple poles at -1 and 2 and double poles at 0 and 1; the
short one has four simple poles. Multiplying by a polynomial clears them and
gives Z_i(s) = chi(2s) f_i(s) - chi(2s-1) f_i(1-s), which is odd under s -> 1-s
and purely imaginary on the critical line.
"""

from __future__ import annotations

from g2zeta import zeta

for kind in ("long", "short"):
    for p in sorted(zeta.POLES[zeta.FunctionId.parse(kind)]):
        probe = zeta.laurent_probe(kind, p)
        print(f"{kind:5s} pole at {p:+.0f}: order {probe.order} (slope {probe.slope:.6f})")

s = 0.2 + 5.5j
for kind in ("long", "short"):
    a, b = zeta.eval_zeta_g2(kind, s), zeta.eval_zeta_g2(kind, 1 - s)
    print(f"{kind}: zeta(s) = {a:.10g}, zeta(1-s) = {b:.10g}")

for kind in ("Z1", "Z2"):
    print(f"{kind}(s) + {kind}(1-s) = {zeta.eval_Z(kind, s) + zeta.eval_Z(kind, 1 - s):.3e}")
    print(f"{kind}(1/2 + 10i) = {zeta.eval_Z(kind, 0.5 + 10j):.10g}")
    print(f"  real zeros off the line: {zeta.EXCEPTIONAL_ZEROS[zeta.FunctionId.parse(kind)]}")

print(zeta.consistency_check(0.3 + 2.7j))
