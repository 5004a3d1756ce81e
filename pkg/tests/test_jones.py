from fractions import Fraction

import pytest

from twobridge import conway, jones
from twobridge.exactalg import LaurentPolynomial as LP
from twobridge.harness.enumeration import EnumerationSpec, enumerate_forms

from .conftest import C


def test_trefoil_jones():
    assert jones.jones_polynomial(C(2, -2)) == LP({1: 1, 3: 1, 4: -1})


def test_trefoil_v3_pin():
    assert jones.v3_from_jones(C(2, -2)) == Fraction(1, 4)


def test_t25_jones_and_v3():
    # standard Jones polynomial of the (2,5) torus knot
    assert jones.jones_polynomial(C(2, -2, 2, -2)) == LP({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})
    assert jones.v3_from_jones(C(2, -2, 2, -2)) == Fraction(5, 4)


def test_torus_2k_v3_closed_form():
    # 4 v3(T(2,n)) = n(n^2 - 1)/24
    for g in range(1, 7):
        n = 2 * g + 1
        assert 4 * jones.v3_from_jones(conway.torus_form(g)) == Fraction(n * (n * n - 1), 24)


def test_unknot_closure_and_loop_rule():
    assert jones.numerator_closure(jones.INFINITY_TANGLE) == 1
    # N(0) is two disjoint circles
    assert jones.numerator_closure(jones.ZERO_TANGLE) == jones.LOOP


def test_crossing_states():
    with pytest.raises(ValueError):
        jones.crossing(0)
    assert jones.crossing(1) == jones.crossing(-1)[::-1]


def test_jones_basic_identities():
    for k in enumerate_forms(EnumerationSpec(9)):
        v = jones.jones_polynomial(k)
        assert v.eval_at_one() == 1
        assert abs(v.eval_at_minus_one()) == conway.determinant(k)
        assert (4 * jones.v3_from_jones(k)).denominator == 1
        assert jones.v3_from_jones(k) > 0


def test_state_sum_matches_transfer():
    for k in enumerate_forms(EnumerationSpec(6)):
        assert jones.state_sum_bracket(k) == jones.kauffman_bracket(k)


def test_state_sum_limit():
    with pytest.raises(ValueError):
        jones.state_sum_bracket(C(8, -2, 2, -8), max_crossings=16)


def test_writhe_equals_crossings():
    for k in enumerate_forms(EnumerationSpec(8)):
        assert jones.diagram_writhe(k) == k.crossings
