from fractions import Fraction
import itertools

import pytest

from twobridge import gauss_forms as gf
from twobridge import jones, seifert
from twobridge.gauss_forms import FamilyId
from twobridge.harness.enumeration import EnumerationSpec, enumerate_forms

from .conftest import C


def test_a2_gauss_examples():
    assert gf.a2_gauss(C(2, -2)) == 1
    for x, y, z, w in itertools.product(range(1, 4), repeat=4):
        assert gf.a2_gauss(C(2 * x, -2 * y, 2 * z, -2 * w)) == z * w + x * w + x * y
    for b, g in itertools.product(range(1, 5), range(1, 6)):
        k = gf.family_form(FamilyId.BG_CHAIN, b, g)
        assert gf.a2_gauss(k) == (2 * b + g - 1) * g // 2


def test_v3_gauss_printed_values():
    assert gf.v3_gauss(C(2, -2)) == 1
    assert gf.v3_gauss(C(2, -2, 2, -2)) == 3
    for x, w in itertools.product(range(1, 6), repeat=2):
        expected = Fraction(x * x * w + w * w * x + x * x + w * w + x + w, 2)
        assert gf.v3_gauss(C(2 * x, -2, 2, -2 * w)) == expected


def test_v3_gauss_printed_agrees_in_genus_one():
    for b, c in itertools.product(range(1, 10), range(-9, 0)):
        k = C(2 * b, 2 * c)
        assert gf.v3_gauss(k) == 4 * jones.v3_from_jones(k)


def test_v3_gauss_printed_disagrees_with_jones_in_genus_two():
    k = C(2, -2, 2, -2)
    assert gf.v3_gauss(k) == 3
    assert 4 * jones.v3_from_jones(k) == 5


def test_partial_sums_formula_matches_jones():
    for k in enumerate_forms(EnumerationSpec(10)):
        assert gf.v3_gauss_partial_sums(k) == 4 * jones.v3_from_jones(k), k


def test_a2_gauss_matches_seifert():
    for k in enumerate_forms(EnumerationSpec(12)):
        assert gf.a2_gauss(k) == seifert.a2(k)


def test_family_examples():
    assert gf.family_closed_form("bg_chain", b_g=2, g=4).det == 25
    rec = gf.family_closed_form(FamilyId.GENUS2_A, 2, 2)
    assert rec.fields() == {"a2": 8, "a4": 4, "four_v3": 14, "det": 33}
    rec = gf.family_closed_form(FamilyId.GENUS3_Y, x=1, v=1)
    assert (rec.det, rec.a2) == (31, 8)
    assert str(rec.form) == "C[2,-2,4,-2,2,-2]"


def test_family_genus2_b():
    for x in range(1, 10):
        rec = gf.family_closed_form(FamilyId.GENUS2_B, x)
        assert (rec.det, rec.a2) == (20 * x - 3, 3 * x + 1)
        assert rec.form == C(2 * x, -4, 2, -2)


def test_final_family_reading():
    assert gf.family_form(FamilyId.GENUS3_FINAL, 2, 2) == C(4, -2, 2, -2, 2, -4)


def test_arity_errors():
    with pytest.raises(TypeError):
        gf.family_closed_form(FamilyId.GENUS2_A, 1)
    with pytest.raises(TypeError):
        gf.family_closed_form(FamilyId.GENUS2_A, 1, 2, 3)
    with pytest.raises(TypeError):
        gf.family_closed_form(FamilyId.GENUS2_A, x=1, v=2)
    with pytest.raises(ValueError):
        gf.family_closed_form("no_such_family", 1)


@pytest.mark.parametrize("family", list(FamilyId))
def test_closed_forms_against_engine(family):
    names = gf.FAMILY_ARITY[family]
    for vals in itertools.product(range(1, 9), repeat=len(names)):
        p = dict(zip(names, vals))
        if family is FamilyId.GENUS4_TWO_PARAM:
            if p["g"] < 2:
                continue
            p["c_1"] = -p["c_1"]
        if family is FamilyId.GENUS2_GENERAL and max(vals) > 5:
            continue
        for diff in gf.compare_family(family, **p):
            assert diff["known_misprint"], diff


def test_known_misprints_reported_with_both_values():
    diffs = gf.compare_family(FamilyId.GENUS4_TWO_PARAM, 2, -3, 5)
    assert [d["field"] for d in diffs] == ["det"]
    rec = gf.family_closed_form(FamilyId.GENUS4_TWO_PARAM, 2, -3, 5)
    assert rec.extra["det_corrected"] == diffs[0]["engine"] != diffs[0]["printed"]
    diffs = gf.compare_family(FamilyId.GENUS2_A, 2, 2)
    assert diffs == [{
        "family": "genus2_a", "params": {"x": 2, "w": 2}, "form": "C[4,-2,2,-4]",
        "field": "four_v3", "printed": 14, "engine": 22, "known_misprint": True,
    }]


def test_genus2_criterion_examples():
    assert gf.genus2_criterion(1, 1, 1, 1) is False
    assert gf.genus2_criterion(2, 2, 2, 2) is True
    assert gf.genus2_criterion(1, 2, 1, 2) is True
    assert gf.genus2_criterion(1, 2, 1, 2, strict=True) is False
