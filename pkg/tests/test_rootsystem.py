from __future__ import annotations

import itertools

import pytest

from g2zeta import rootsystem as rsm
from g2zeta.rootsystem import ALPHA, BETA, POSITIVE_ROOTS, LinearForm


@pytest.fixture(scope="module")
def rs():
    return rsm.build_g2()


def test_six_positive_roots_and_twelve_elements(rs):
    assert len(POSITIVE_ROOTS) == 6
    assert len(rs.elements) == 12
    assert len({w.name for w in rs.elements}) == 12
    assert sorted(len(w.inversions) for w in rs.elements) == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6]


def test_inversion_sets_are_roots_sent_negative(rs):
    for w in rs.elements:
        sent_negative = {r for r in POSITIVE_ROOTS if not w.act_on_root(r).is_positive}
        assert set(w.inversions) == sent_negative
        assert rsm.inversion_set(w) == w.inversions
        assert len(w.word) == len(w.inversions)


def test_group_is_closed_under_composition(rs):
    actions = {w.action for w in rs.elements}
    for a, b in itertools.product(rs.elements, repeat=2):
        prod = tuple(
            tuple(sum(a.action[i][k] * b.action[k][j] for k in range(2)) for j in range(2)) for i in range(2)
        )
        assert prod in actions


def test_longest_element_inverts_everything(rs):
    longest = max(rs.elements, key=lambda w: len(w.inversions))
    assert set(longest.inversions) == set(POSITIVE_ROOTS)


def test_identity_pairings(rs):
    e = rs["e"]
    assert rsm.pairing_after_action(e, ALPHA) - 1 == LinearForm(1, -1, -1)
    assert rsm.pairing_after_action(e, BETA) - 1 == LinearForm(0, 1, -1)


def test_linear_form_algebra():
    f = LinearForm(1, 2, 3)
    assert (f - f).is_constant
    assert (f * 2).as_list() == [2, 4, 6]
    assert f.substitute(LinearForm(0, 1, 0), LinearForm(1, 0, 0)) == LinearForm(2, 1, 3)
    assert f(1, 1) == 6
    assert LinearForm(2, 4, 6).proportional_to(f) == 2


def test_table_lists_every_element(rs):
    text = rsm.format_table(rs)
    for w in rs.elements:
        assert w.name in text
