"""Acceptance criteria, one test each, with a printed pass/fail line per criterion."""

from __future__ import annotations

import math
import subprocess
import sys
import time

import mpmath as mp
import numpy as np
import pytest

import oracle
from conftest import ACCEPTANCE_LINES
from g2zeta import period, rhverify, zeta, zeros
from g2zeta.zeta import FunctionId, RemainderFamily
from g2zeta.zeros import Rectangle


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def pole_avoiding_points(rng, n, avoid, gap=0.05, re=(-3.0, 4.0), im=20.0):
    out = []
    while len(out) < n:
        z = complex(rng.uniform(*re), rng.uniform(-im, im))
        if all(abs(z - p) > gap for p in avoid):
            out.append(z)
    return np.array(out)


def test_criterion_01_symbolic_pipeline():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    worst, symbolic = 0.0, True
    for kind in ("long", "short"):
        built = period.pipeline_zeta(kind)
        ref = period.reference_zeta(kind)
        symbolic &= built.same_terms(ref)
        pts = pole_avoiding_points(rng, 50, tuple(zeta.POLES[FunctionId.parse(kind)]))
        a, b = built.evaluate(pts), ref.evaluate(pts)
        worst = max(worst, float(np.max(np.abs(a - b) / np.abs(b))))
    elapsed = time.perf_counter() - t0
    ok = symbolic and worst <= 1e-12 and elapsed < 5.0
    report(1, ok, f"symbolic match={symbolic}, max rel diff {worst:.2e} (<=1e-12), {elapsed:.2f} s (<5 s)")


def test_criterion_02_functional_equations():
    rng = np.random.default_rng(202)
    zeta_worst, z_worst = 0.0, 0.0
    for kind, zkind in (("long", "Z1"), ("short", "Z2")):
        avoid = tuple(zeta.POLES[FunctionId.parse(kind)]) + (1 / 3, 1 / 2, 2 / 3)
        for s in pole_avoiding_points(rng, 100, avoid):
            v = zeta.eval_zeta_g2(kind, s)
            zeta_worst = max(zeta_worst, abs(v - zeta.eval_zeta_g2(kind, 1 - s)) / abs(v))
        pts = pole_avoiding_points(rng, 100, (), re=(-5.0, 6.0), im=30.0)
        v = np.asarray(zeta.eval_Z(zkind, pts))
        z_worst = max(z_worst, float(np.max(np.abs(v + np.asarray(zeta.eval_Z(zkind, 1 - pts))) / np.abs(v))))
    ok = zeta_worst <= 1e-9 and z_worst <= 1e-9
    report(2, ok, f"zeta FE max rel residual {zeta_worst:.2e}, Z FE {z_worst:.2e} (<=1e-9)")


def test_criterion_03_pole_profiles():
    expected = {"long": {-1: 1, 2: 1, 0: 2, 1: 2}, "short": {-2: 1, 0: 1, 1: 1, 3: 1}}
    worst, ok = 0.0, True
    for kind, poles in expected.items():
        for p, order in poles.items():
            probe = zeta.laurent_probe(kind, float(p))
            worst = max(worst, abs(probe.slope - order))
            ok &= probe.order == order and abs(probe.slope - order) <= 0.1
    report(3, ok, f"all pole orders as expected, max slope error {worst:.1e} (<=0.1)")


def test_criterion_04_known_zeros():
    points = {"Z1": (0.0, 1 / 3, 2 / 3, 1.0, 0.5), "Z2": (-1.0, 0.0, 1.0, 2.0, 0.5)}
    worst = 0.0
    for kind, xs in points.items():
        for x in xs:
            worst = max(worst, abs(zeta.eval_Z(kind, x)) / zeros.local_scale(kind, complex(x)))
    report(4, worst <= 1e-8, f"max |Z|/local scale {worst:.2e} (<=1e-8)")


@pytest.mark.parametrize("kind,target", [("F1", 0.90 + 2.09j), ("F2", 1.17 + 3.43j)])
def test_criterion_05_zeros_of_f(kind, target):
    t0 = time.perf_counter()
    rect = Rectangle(0.5, 5.0, -10.0, 10.0)
    count = zeros.winding_count(kind, rect).count
    found = zeros.zeros_in_rectangle(kind, rect)
    upper = [r.location for r in found if r.location.imag > 1e-6]
    elapsed = time.perf_counter() - t0
    near = len(upper) == 1 and abs(upper[0].real - target.real) <= 0.01 and abs(upper[0].imag - target.imag) <= 0.01
    ok = count == 3 and len(found) == 3 and near and elapsed < 60
    rho = f"{upper[0]:.5f}" if upper else "none"
    report(5, ok, f"{kind}: winding {count} (=3), non-real zero {rho} (target {target} +-0.01), {elapsed:.1f} s (<60 s)")


def test_criterion_06_constants():
    A = zeta.A
    d1 = float(mp.re(mp.diff(oracle.f1, 0)))
    lib_d1 = complex((zeta.eval_f("F1", 1e-5) - zeta.eval_f("F1", -1e-5)) / 2e-5).real
    f2_0 = complex(zeta.eval_f("F2", 0.0)).real
    c1, c2 = 2 * math.sqrt(3) * math.pi * A, 2 * math.pi * A
    ts = np.linspace(-3000.0, 3000.0, 241)
    measured = {}
    for fid, fam in ((FunctionId.F1, RemainderFamily.F1_LEFT_R), (FunctionId.F2, RemainderFamily.F2_LEFT_R)):
        measured[fid] = max(float(np.max(np.abs(zeta.eval_remainder(fam, 2, sigma + 1j * ts)))) for sigma in (-1000.0, -2000.0))
    ok = (
        abs(A - (math.pi / 3 - 1)) < 1e-15
        and abs(lib_d1 + 2.176) <= 0.005
        and abs(lib_d1 - d1) < 1e-6
        and abs(f2_0 + 6.283) <= 0.005
        and abs(c1 - 0.51364) <= 0.0005
        and abs(c2 - 0.29655) <= 0.0005
        and abs(measured[FunctionId.F1] / c1 - 1) <= 0.1
        and abs(measured[FunctionId.F2] / c2 - 1) <= 0.1
    )
    report(6, ok, f"A={A:.6f}, f1'(0)={lib_d1:.5f}, f2(0)={f2_0:.5f}, "
                  f"2sqrt3 pi A={c1:.5f} (far-left {measured[FunctionId.F1]:.5f}), "
                  f"2 pi A={c2:.5f} (far-left {measured[FunctionId.F2]:.5f})")


def test_criterion_07_chi_ratio_bound():
    rep = zeros.ratio_bound_scan((0.51, 20.0), 50.0)
    # independent spot check of the maximiser with mpmath
    s = rep.argmax
    exact = float(abs(oracle.chi(2 * s - 1) / oracle.chi(2 * s)))
    ok = rep.max_value < 1.0 and abs(exact - rep.max_value) < 1e-10
    report(7, ok, f"max |chi(2s-1)/chi(2s)| = {rep.max_value:.6f} at {s:.3f} over {rep.points} points (<1)")


def test_criterion_08_bound_grids():
    ok = True
    parts = []
    for kind in (FunctionId.Z1, FunctionId.Z2):
        passed, measured, tol = rhverify.verify_right_plane(kind)
        ok &= passed
        maxes = ", ".join(f"{m:.3f}" for m in measured["max_abs_R_at_re_ge_20"])
        parts.append(f"{kind.value}: max|R_i| [{maxes}] vs {list(tol['bounds'])}, max sum {measured['max_sum']:.3f} (<1)")
    report(8, ok, "; ".join(parts))


def test_criterion_09_xi_table_and_gap():
    t0 = time.perf_counter()
    table = zeros.compute_xi_zeros(130.0)
    first = table.ordinates[:3]
    lag = zeros.lagarias_gap_check(table, 100.0, window=22.0)
    oracle_first = [float(mp.im(mp.zetazero(k))) for k in (1, 2, 3)]
    elapsed = time.perf_counter() - t0
    ok = (
        all(abs(a - b) <= 0.01 for a, b in zip(first, (14.13, 21.02, 25.01)))
        and np.allclose(first, oracle_first, atol=1e-8)
        and lag.passed
        and lag.min_count >= 3
        and elapsed < 120
    )
    report(9, ok, f"first ordinates {[round(g, 4) for g in first]}, min window count {lag.min_count} (>=3), {elapsed:.1f} s (<120 s)")


@pytest.mark.parametrize("kind", ["Z1", "Z2"])
def test_criterion_10_rh_scan(kind):
    ok, measured, _ = rhverify.rh_scan(kind, 60.0)
    ok = ok and measured["band_winding"] == 0 and measured["line_zeros"] == measured["box_winding"] > 0
    report(10, ok, f"{kind}: band winding {measured['band_winding']} (=0), line zeros {measured['line_zeros']} "
                   f"= box winding {measured['box_winding']} (sampled evidence)")


def test_criterion_11_determinism(tmp_path):
    outs = [tmp_path / "a.json", tmp_path / "b.json"]
    procs = [
        subprocess.Popen([sys.executable, "-m", "g2zeta", "rh", "verify", "--T", "60", "--seed", "7", "--out", str(o)])
        for o in outs
    ]
    codes = [p.wait(timeout=900) for p in procs]
    a, b = (o.read_bytes() for o in outs)
    ok = codes == [0, 0] and a == b and len(a) > 0
    report(11, ok, f"two runs exit {codes}, {len(a)} bytes, byte-identical={a == b}")
