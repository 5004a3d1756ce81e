from math import gcd

import pytest

from twobridge import conway
from twobridge.conway import ConwayForm, ConwayParseError, ConwayValidationError, Move

from .conftest import C


def test_parse_trefoil():
    k = conway.parse("2,-2")
    assert (k.g, k.b, k.c) == (1, (1,), (-1,))


def test_parse_stores_innermost_first():
    k = conway.parse("4,-2,2,-4")
    assert k.b == (1, 2) and k.c == (-2, -1)
    assert conway.parse("C[4, −2, 2, −4]") == k
    assert str(k) == "C[4,-2,2,-4]"


@pytest.mark.parametrize("text", ["2,0,2,-2", "3,-2", "-2,2", "2,2", "2,-2,2"])
def test_parse_rejects_bad_entries(text):
    with pytest.raises(ConwayValidationError):
        conway.parse(text)


@pytest.mark.parametrize("text", ["", "C[", "2;-2", "a,b"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ConwayParseError):
        conway.parse(text)


def test_direct_construction_validates():
    with pytest.raises(ConwayValidationError):
        ConwayForm((1, 0), (-1, -1))
    with pytest.raises(ConwayValidationError):
        ConwayForm((1,), (1,))


def test_mirror_symmetry():
    assert conway.mirror_symmetry(ConwayForm((2,), (-1,))) == ConwayForm((1,), (-2,))
    assert conway.mirror_symmetry(C(2, -2)) == C(2, -2)
    assert conway.mirror_symmetry(C(4, -2, 2, -2)) == C(2, -2, 2, -4)


def test_fractions():
    assert conway.fraction(C(2, -2), 1) == (3, 2)
    assert conway.fraction(C(2, -2, 2, -2), 2) == (5, 4)
    for b in range(1, 51):
        for c in range(-50, 0):
            assert conway.determinant(ConwayForm((b,), (c,))) == -4 * b * c - 1


def test_determinant_examples():
    assert conway.determinant(C(2, -2)) == 3
    assert conway.determinant(C(2, -2, 2, -2)) == 5
    assert conway.determinant(C(4, -2, 2, -4)) == 33


def test_truncate():
    assert conway.truncate(C(4, -2, 2, -2), 1) == C(2, -2)
    k = C(2, -4, 6, -2)
    assert conway.truncate(k, 2) == k
    assert conway.truncate(k, 1) == C(6, -2)
    with pytest.raises(IndexError):
        conway.truncate(k, 3)


def test_neighbor():
    assert conway.neighbor(C(2, -2), 1, Move.B_PLUS) == C(4, -2)
    assert conway.neighbor(C(2, -2), 1, "c_minus") == C(2, -4)
    assert conway.neighbor(C(2, -2, 2, -2), 1, "c_minus") == C(2, -2, 2, -4)
    with pytest.raises(IndexError):
        conway.neighbor(C(2, -2), 2, "b_plus")


def test_torus_and_delta():
    assert conway.is_torus_2k(C(2, -2, 2, -2))
    assert not conway.is_torus_2k(C(4, -2))
    assert not conway.is_torus_2k(C(2, -2, 2, -4))
    assert conway.delta(C(2, -2, 2, -2)) == 0
    assert conway.delta(C(4, -2)) == 1
    assert conway.delta(C(4, -4)) == 2


def test_key_and_canonical_key():
    k = C(4, -2, 2, -2)
    assert k.key() == "g=2;b=1,2;c=-1,-1"
    assert conway.canonical_key(k) == conway.canonical_key(conway.mirror_symmetry(k))


def test_counts():
    k = C(4, -2, 2, -4)
    assert k.crossings == 12 and k.complexity == 6


def test_corpus_properties():
    from twobridge.harness.enumeration import EnumerationSpec, enumerate_forms
    from twobridge.induction import first_estimate

    for k in enumerate_forms(EnumerationSpec(14)):
        for d, p in conway.fractions(k)[1:]:
            assert d > p > 0 and gcd(d, p) == 1
        assert first_estimate(k)
        m = conway.mirror_symmetry(k)
        assert conway.mirror_symmetry(m) == k
        assert (conway.determinant(m), m.g, m.complexity) == (conway.determinant(k), k.g, k.complexity)
