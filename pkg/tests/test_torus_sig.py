from fractions import Fraction

import pytest

from twobridge import torus_sig as ts


def test_parities():
    assert ts.a_parity(3) == 1 and ts.a_parity(4) == 2
    assert ts.b_parity(3, 4) == Fraction(1, 2)
    assert ts.b_parity(2, 5) == 0


def test_sigma_examples():
    assert ts.sigma_torus(3, 3) == 4
    assert ts.sigma_torus(3, 6) == 8
    assert ts.sigma_torus(2, 5) == 4
    assert ts.sigma_torus(5, 2) == 4
    assert ts.sigma_torus(1, 9) == 0


def test_bounds_examples():
    assert ts.check_bounds(3, 3)
    assert ts.check_bounds(2, 5)
    assert ts.check_bounds(1, 7)
    with pytest.raises(ValueError):
        ts.check_bounds(4, 3)


def test_total_sig_examples():
    assert ts.total_sig_torus_2_odd(1, 6) == 8
    assert ts.total_sig_torus_2_odd(1, 2) == 2
    assert ts.total_sig_torus_2_odd(2, 2) == 4


def test_two_strand_torus_knot():
    for k in range(1, 40, 2):
        assert ts.sigma_torus(2, k) == k - 1


def test_bounds_exhaustive():
    for n in range(1, 81):
        for q in range(1, n + 1):
            assert ts.check_bounds(q, n), (q, n)


def test_density_floor():
    for g in range(1, 13):
        for p in range(11, 61):
            assert Fraction(ts.total_sig_torus_2_odd(g, p), g * p) >= ts.density_floor(g)
    assert ts.density_floor(5) == 1 and ts.density_floor(6) == Fraction(10, 11)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        ts.sigma_torus(0, 3)
