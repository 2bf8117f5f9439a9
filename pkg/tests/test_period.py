from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from g2zeta import period
from g2zeta.errors import AtPole

SURVIVING = {
    "long": {"e", "w_alpha", "w_3alpha+beta", "w_2alpha+beta", "w_3alpha+2beta",
             "sigma(pi)", "sigma(4pi/3)", "sigma(5pi/3)"},
    "short": {"e", "w_beta", "w_2alpha+beta", "w_3alpha+2beta", "w_alpha+beta",
              "sigma(pi/3)", "sigma(2pi/3)", "sigma(pi)"},
}
ORACLE = {"long": oracle.zeta_long, "short": oracle.zeta_short}


@pytest.fixture(scope="module")
def omega():
    return period.build_period()


def test_period_has_one_term_per_weyl_element(omega):
    assert len(omega.terms) == 12
    assert all(len(t.ratios) == len(set(t.ratios)) for t in omega.terms)
    assert sorted(len(t.ratios) for t in omega.terms) == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6]


@pytest.mark.parametrize("kind", ["long", "short"])
def test_surviving_terms(omega, kind):
    res = period.residue_along(omega, kind)
    assert {t.weyl for t in res.terms} == SURVIVING[kind]


@pytest.mark.parametrize("kind", ["long", "short"])
@pytest.mark.parametrize("s", [0.37 + 1.3j, 2.2 - 0.6j, -1.4 + 4.1j])
def test_residue_matches_contour_integral(omega, kind, s):
    """The symbolic residue equals (1/2 pi i) times a small circle integral of the period."""
    r = 1e-3
    u = r * np.exp(2j * np.pi * (np.arange(256) + 0.5) / 256)
    if kind == "long":
        vals = period.eval_period(omega, s + 1 + u, s)
    else:
        vals = period.eval_period(omega, s, 1 + u)
    numeric = np.mean(vals * u)
    symbolic = complex(period.residue_along(omega, kind).evaluate(s))
    assert abs(numeric - symbolic) <= 1e-9 * abs(symbolic)


@pytest.mark.parametrize("kind", ["long", "short"])
def test_pipeline_matches_reference_symbolically(kind):
    assert period.pipeline_zeta(kind).same_terms(period.reference_zeta(kind))
    assert len(period.pipeline_zeta(kind)) == 8


@settings(max_examples=25, deadline=None)
@given(st.floats(-3, 4), st.floats(0.2, 15))
def test_pipeline_matches_mpmath_oracle(x, y):
    s = complex(x, y)
    for kind in ("long", "short"):
        got = complex(period.pipeline_zeta(kind).evaluate(s))
        want = oracle.to_complex(ORACLE[kind](s))
        assert abs(got - want) <= 1e-11 * abs(want)


def test_shift_relates_unshifted_and_final():
    for kind in ("long", "short"):
        s = 0.3 + 2.1j
        a = complex(period.unshifted_zeta(kind).evaluate(s - 1))
        b = complex(period.pipeline_zeta(kind).evaluate(s))
        assert abs(a - b) <= 1e-13 * abs(b)


@pytest.mark.parametrize("which", ["period", "long", "short"])
def test_json_round_trip(omega, which):
    expr = omega if which == "period" else period.pipeline_zeta(which)
    text = json.dumps(period.to_json(expr))
    back = period.from_json(text)
    assert period.to_json(back) == period.to_json(expr)


def test_period_refuses_singular_points(omega):
    with pytest.raises(AtPole):
        period.eval_period(omega, 2.0, 1.0)


def test_canonical_form_is_idempotent():
    for kind in ("long", "short"):
        for t in period.reference_zeta(kind).terms:
            assert t.canonical().key() == t.canonical().canonical().key()


def test_format_period_lists_all_elements(omega):
    text = period.format_period(omega)
    assert text.count("\n") >= 11
