from __future__ import annotations

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from g2zeta import zeta
from g2zeta.errors import AtPole, PrecisionLoss
from g2zeta.zeta import FunctionId, RemainderFamily

points = st.tuples(st.floats(-4, 5), st.floats(0.3, 25)).map(lambda p: complex(*p))


def test_constant_a():
    assert zeta.A == pytest.approx(math.pi / 3 - 1, abs=1e-16)


def test_function_id_parsing():
    assert FunctionId.parse("z1") is FunctionId.Z1
    assert FunctionId.parse("LONG") is FunctionId.ZETA_LONG
    with pytest.raises(ValueError):
        FunctionId.parse("nope")


@settings(max_examples=40, deadline=None)
@given(points)
def test_zeta_functional_equation(s):
    for kind in ("long", "short"):
        a = zeta.eval_zeta_g2(kind, s)
        b = zeta.eval_zeta_g2(kind, 1 - s)
        assert abs(a - b) <= 1e-9 * abs(a)


@settings(max_examples=40, deadline=None)
@given(points)
def test_Z_is_odd_under_reflection(s):
    for kind in ("Z1", "Z2"):
        a = zeta.eval_Z(kind, s)
        assert abs(a + zeta.eval_Z(kind, 1 - s)) <= 1e-10 * abs(a)


@pytest.mark.parametrize("s", [0.2 + 0.7j, 1.8 + 9.5j, -3.1 + 2j, 0.5 + 30j])
def test_Z_matches_oracle(s):
    for kind in ("Z1", "Z2"):
        want = oracle.to_complex(oracle.Z(kind, s))
        assert abs(zeta.eval_Z(kind, s) - want) <= 1e-11 * abs(want)


@pytest.mark.parametrize("s", [0.3 + 2.7j, 4.2 - 1j, -2.6 + 0.4j])
def test_Z_is_prefactor_times_zeta(s):
    rep = zeta.consistency_check(s)
    assert rep.ok, rep.failures


@pytest.mark.parametrize("kind", ["long", "short"])
def test_pole_orders(kind):
    for p, order in zeta.POLES[FunctionId.parse(kind)].items():
        probe = zeta.laurent_probe(kind, p)
        assert probe.order == order
        assert abs(probe.slope - order) < 1e-6


def test_laurent_probe_sees_a_simple_zero():
    probe = zeta.laurent_probe("Z1", 1.0 / 3.0, radii=(1e-2, 1e-3))
    assert probe.order == -1


def test_poles_raise():
    with pytest.raises(AtPole):
        zeta.eval_zeta_g2("long", 1.0)
    with pytest.raises(AtPole):
        zeta.eval_zeta_g2("short", -2.0 + 1e-6j)


def test_dual_path_reports_both_values():
    d = zeta.eval_zeta_g2_detail("long", 0.4 + 3j)
    assert abs(d.term_sum - d.chi_form) <= 1e-10 * abs(d.value)


@pytest.mark.parametrize("kind", ["Z1", "Z2"])
def test_exceptional_real_zeros(kind):
    for x in zeta.EXCEPTIONAL_ZEROS[FunctionId.parse(kind)] + (0.5,):
        assert abs(zeta.eval_Z(kind, x)) <= 1e-10 * max(1.0, abs(zeta.eval_Z(kind, x + 0.1)))


def test_f_values_against_oracle():
    d1 = complex(mp.diff(oracle.f1, 0))
    assert abs(d1.real - (-2.176)) < 0.005
    assert abs(complex(zeta.eval_f("F1", 1e-5) - zeta.eval_f("F1", -1e-5)) / 2e-5 - d1) < 1e-6
    assert abs(zeta.eval_f("F2", 0.0) - oracle.to_complex(oracle.f2(0))) < 1e-12
    assert abs(zeta.eval_f("F2", 0.0) + 2 * math.pi) < 1e-9


FACTOR_POINTS = [0.7 + 3j, 12 + 20j, -3.3 + 1.5j, 25 - 40j]


@pytest.mark.parametrize("family", [
    RemainderFamily.F1_LEFT_R, RemainderFamily.F2_LEFT_R, RemainderFamily.F1_RIGHT_Q,
    RemainderFamily.F2_RIGHT_Q, RemainderFamily.Z1_R, RemainderFamily.Z2_R,
])
def test_factorisations_reconstruct_the_function(family):
    fid = zeta.FACTORED_FUNCTION[family]
    for s in FACTOR_POINTS:
        lead, bracket = zeta.factorization(family, s)
        want = zeta.eval_Z(fid, s) if fid in (FunctionId.Z1, FunctionId.Z2) else zeta.eval_f(fid, s)
        assert abs(lead * bracket - want) <= 1e-10 * abs(want)


def test_remainders_decay_to_the_right():
    def total(fam, s):
        return sum(abs(zeta.eval_remainder(fam, i, s)) for i in zeta.FAMILY_INDICES[fam])

    for fam in (RemainderFamily.Z1_R, RemainderFamily.Z2_R):
        assert total(fam, 120 + 5j) < 0.6 * total(fam, 60 + 5j) < 0.6


def test_remainder_index_validation():
    with pytest.raises(ValueError):
        zeta.eval_remainder(RemainderFamily.Z1_R, 6, 20.0)


def test_left_remainder_approaches_closed_form():
    ts = np.linspace(-3000, 3000, 241)
    for fid, fam in ((FunctionId.F1, RemainderFamily.F1_LEFT_R), (FunctionId.F2, RemainderFamily.F2_LEFT_R)):
        peak = float(np.max(np.abs(zeta.eval_remainder(fam, 2, -2000 + 1j * ts))))
        assert abs(peak / zeta.asymptotic_left_constant(fid) - 1) < 0.1


@pytest.mark.parametrize("kind", ["F1", "F2"])
def test_reflection_ratio(kind):
    for sigma in (1.7, 3.2, 7.5):
        want = zeta.eval_f(kind, 1 - sigma) / zeta.eval_f(kind, sigma)
        assert abs(zeta.reflection_ratio(kind, sigma) - want) <= 1e-10 * abs(want)


def test_critical_line_value_is_imaginary_part():
    t = np.array([3.0, 17.5, 44.0])
    v = zeta.critical_line_value("Z2", t)
    assert np.allclose(v, np.imag(zeta.eval_Z("Z2", 0.5 + 1j * t)), rtol=1e-14)


def test_critical_line_value_guards_real_part(monkeypatch):
    monkeypatch.setattr(zeta, "z_terms", lambda kind, s: (np.asarray(s) * 0 + 1.0, np.asarray(s) * 0))
    with pytest.raises(PrecisionLoss):
        zeta.critical_line_value("Z1", 3.0)
