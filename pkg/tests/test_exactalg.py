from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twobridge.exactalg import LaurentPolynomial as LP
from twobridge.exactalg import Rational, bareiss_determinant, cyclotomic_polynomial

t = LP.monomial(1)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=6).map(LP)


def test_difference_of_squares():
    assert (t + 1) * (t - 1) == LP({2: 1, 0: -1})


def test_additive_identity():
    p = LP({-2: 3, 5: -1})
    assert p + 0 == p
    assert p + LP() == p


def test_laurent_square():
    assert (t ** -1 + t) ** 2 == LP({-2: 1, 0: 2, 2: 1})


def test_zero_coefficients_not_stored():
    assert LP({1: 0, 2: 3}).terms == {2: 3}
    assert (t - t).is_zero()


def test_derivative():
    assert LP.monomial(3).derivative() == LP({2: 3})
    assert LP.monomial(-1).derivative() == LP({-2: -1})
    trefoil = LP({4: -1, 3: 1, 1: 1})
    assert trefoil.derivative().derivative().eval_at_one() == -6


def test_evaluation():
    assert LP({2: 1, 1: -1, 0: 1}).eval_at_minus_one() == 3
    assert LP().eval_at_one() == 0 and LP().eval_at_minus_one() == 0
    assert LP({4: -1, 3: 1, 1: 1}).eval_at_minus_one() == -3
    assert LP({-1: 2})(Fraction(1, 2)) == 4


def test_printing_ascending():
    assert str(LP({3: 1, -1: -2})) == "-2*t^-1 + 1*t^3"
    assert str(LP()) == "0"


def test_rational_is_reduced():
    r = Rational(6, -4)
    assert (r.numerator, r.denominator) == (-3, 2)


def test_cyclotomic():
    assert cyclotomic_polynomial(6) == LP({2: 1, 1: -1, 0: 1})
    assert cyclotomic_polynomial(12) == LP({4: 1, 2: -1, 0: 1})


def test_exact_division():
    p = (t ** -2 + 3) * (t - 2)
    assert p.exact_div(t - 2) == t ** -2 + 3
    with pytest.raises(ArithmeticError):
        (t + 1).exact_div(t - 1)


def test_divide_exponents_checks_divisibility():
    assert LP({8: 1, -4: 2}).divide_exponents(4) == LP({2: 1, -1: 2})
    with pytest.raises(ArithmeticError):
        LP({2: 1}).divide_exponents(4)


def test_bareiss_integer_and_polynomial():
    assert bareiss_determinant([[2, 1, 0], [1, 2, 1], [0, 1, 2]]) == 4
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    m = [[t, LP.constant(1)], [LP.constant(1), t]]
    assert bareiss_determinant(m) == t * t - 1


@given(polys, polys, polys)
@settings(max_examples=150)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p * 1 == p and p + 0 == p
    assert p - p == 0


@given(polys, polys)
@settings(max_examples=150)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(p, x):
    q = p * p + p
    if x == 0 and not p.is_zero() and p.min_degree() < 0:
        return
    assert q(x) == p(x) ** 2 + p(x)
