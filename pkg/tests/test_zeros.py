from __future__ import annotations

import json

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2zeta import zeros
from g2zeta.errors import ContourNearZero
from g2zeta.zeros import Rectangle, XiZeroTable


def poly(roots):
    roots = np.asarray(roots, dtype=complex)

    def f(s):
        s = np.asarray(s, dtype=complex)
        return np.prod(s[..., None] - roots, axis=-1)

    return f


def test_rectangle_parse_and_split():
    r = Rectangle.parse("0.5,5,-10,10")
    assert (r.re_min, r.re_max, r.im_min, r.im_max) == (0.5, 5, -10, 10)
    a, b = r.split(0.25)
    assert a.im_max == b.im_min == -5.0
    assert r.contains(1 + 1j) and not r.contains(6 + 0j)
    with pytest.raises(ValueError):
        Rectangle.parse("1,2,3")
    with pytest.raises(ValueError):
        Rectangle(1, 1, 0, 1)


def test_boundary_parametrisation_is_closed_and_counter_clockwise():
    r = Rectangle(0, 2, 0, 1)
    u = np.array(r.corners_u() + [r.perimeter])
    assert np.allclose(r.boundary_point(u), [0, 2, 2 + 1j, 1j, 0])


roots_st = st.lists(
    st.tuples(st.floats(-4, 4), st.floats(-4, 4)).map(lambda p: complex(*p)), min_size=1, max_size=6
)


@settings(max_examples=40, deadline=None)
@given(roots_st)
def test_winding_counts_polynomial_roots(roots):
    rect = Rectangle(-2.013, 2.021, -1.987, 2.003)
    # keep roots clear of the boundary so the count is unambiguous
    roots = [z for z in roots if min(abs(z.real - rect.re_min), abs(z.real - rect.re_max),
                                      abs(z.imag - rect.im_min), abs(z.imag - rect.im_max)) > 0.05]
    if not roots:
        return
    expected = sum(rect.contains(z) for z in roots)
    assert zeros.winding_count(poly(roots), rect).count == expected


def test_winding_counts_poles_negatively():
    f = lambda s: (np.asarray(s) - 0.3) / (np.asarray(s) + 0.2j) ** 2
    assert zeros.winding_count(f, Rectangle(-1, 1, -1, 1)).count == -1


def test_winding_dilates_off_a_boundary_zero():
    res = zeros.winding_count(poly([1.0]), Rectangle(0, 1, -1, 1))
    assert res.dilations >= 1
    assert res.count == 1


def test_winding_gives_up_on_zero_heavy_boundary():
    f = lambda s: np.sin(np.pi * np.asarray(s) * 1e4)
    with pytest.raises(ContourNearZero):
        zeros.winding_count(f, Rectangle(0, 1, -1e-9, 1e-9), points=50)


def test_multiplicity_and_newton():
    f = poly([0.3 + 0.4j, 0.3 + 0.4j, -1.0])
    assert zeros.multiplicity(f, 0.3 + 0.4j) == 2
    rec = zeros.refine(poly([2 - 1j, 5.0]), 1.7 - 0.8j)
    assert abs(rec.location - (2 - 1j)) < 1e-10


def test_zeros_in_rectangle_finds_every_root():
    roots = [0.1 + 0.2j, -0.7 + 1.1j, 1.3 - 0.9j, 0.6 + 0.0j]
    found = zeros.zeros_in_rectangle(poly(roots), Rectangle(-2, 2, -2, 2), min_size=0.3)
    got = sorted((round(r.location.real, 8), round(r.location.imag, 8)) for r in found)
    assert got == sorted((round(z.real, 8), round(z.imag, 8)) for z in roots)


def test_line_scan_finds_first_xi_zeros():
    brackets = zeros.line_scan("xi", 10.0, 26.0, 0.05)
    located = [zeros.refine("xi", b).location.imag for b in brackets]
    want = [float(mp.im(mp.zetazero(k))) for k in (1, 2, 3)]
    assert np.allclose(located, want, atol=1e-8)


def test_line_scan_rejects_coarse_steps():
    with pytest.raises(ValueError):
        zeros.line_scan("Z1", 0, 10, 0.1)


def test_Z1_line_zeros_are_zeros_of_Z1():
    for b in zeros.line_scan("Z1", 0.0, 9.0, 0.01):
        rec = zeros.refine("Z1", b)
        assert rec.residual <= rec.tol * rec.local_scale
        assert abs(rec.location.real - 0.5) < 1e-15


def test_xi_table_against_mpmath_and_cache(tmp_path):
    table = zeros.compute_xi_zeros(60.0)
    want = [float(mp.im(mp.zetazero(k))) for k in range(1, 14)]
    assert len(table.ordinates) == 13
    assert np.allclose(table.ordinates, want, atol=1e-8)

    cache = tmp_path / "xi.json"
    first = zeros.xi_zeros_up_to(40.0, cache=cache)
    assert json.loads(cache.read_text())["height"] == 40.0
    cache.write_text(json.dumps({"height": 40.0, "ordinates": [1.0, 2.0]}))
    assert zeros.xi_zeros_up_to(30.0, cache=cache).ordinates == [1.0, 2.0]  # reused, not recomputed
    assert first.up_to(22.0).ordinates == first.ordinates[:2]


def test_xi_table_validation():
    with pytest.raises(ValueError):
        XiZeroTable([3.0, 2.0], 5.0)
    with pytest.raises(ValueError):
        zeros.compute_xi_zeros(250.0)


def test_lagarias_check():
    table = XiZeroTable([float(mp.im(mp.zetazero(k))) for k in range(1, 44)], 130.0)
    rep = zeros.lagarias_gap_check(table, 100.0)
    assert rep.passed and rep.min_count == 3
    with pytest.raises(ValueError):
        zeros.lagarias_gap_check(table, 120.0)
    with pytest.raises(ValueError):
        zeros.lagarias_gap_check(XiZeroTable([], 200.0), 10.0)


def test_ratio_scan_bound_and_validation():
    rep = zeros.ratio_bound_scan(n_re=60, n_im=60)
    assert rep.passed and 0.9 < rep.max_value < 1.0
    with pytest.raises(ValueError):
        zeros.ratio_bound_scan(re_range=(0.5, 2.0))


def test_F1_zero_count_near_origin():
    assert zeros.winding_count("F1", Rectangle(0.5, 5, -10, 10)).count == 3
