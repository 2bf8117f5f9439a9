"""The three zeros of f1 and f2 right of the critical line.

The argument principle counts zeros in [1/2, 5] x [-10, 10]; subdivision and
Newton steps then locate them: one real zero and a conjugate pair.
"""

from __future__ import annotations

from g2zeta import zeros
from g2zeta.zeros import Rectangle

rect = Rectangle(0.5, 5.0, -10.0, 10.0)
for kind in ("F1", "F2"):
    w = zeros.winding_count(kind, rect)
    print(f"{kind}: {w.count} zeros (phase total {w.raw_phase_turns:.6f} turns, {w.evaluations} evaluations)")
    for rec in zeros.zeros_in_rectangle(kind, rect):
        print(f"   {rec.location:.10f}   residual {rec.residual:.1e}")
