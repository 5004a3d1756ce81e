"""Closed-form invariants: Gauss-diagram sums and the family formulas.

Everything here is a second route to numbers the engine already computes
from the Seifert matrix, the continued fraction, and the Jones polynomial.
The family formulas are evaluated exactly as printed, so a disagreement
with the engine is reported rather than corrected silently.  Fields known
to be misprinted are listed in :data:`KNOWN_MISPRINTS`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import conway, jones, seifert
from .conway import ConwayForm

__all__ = [
    "a2_gauss",
    "v3_gauss",
    "v3_gauss_partial_sums",
    "FamilyId",
    "FAMILY_ARITY",
    "KNOWN_MISPRINTS",
    "FamilyRecord",
    "family_form",
    "family_closed_form",
    "engine_values",
    "compare_family",
    "genus2_criterion",
    "genus2_expression",
]


def a2_gauss(k: ConwayForm) -> int:
    """a2 = sum over j <= i of -b_i c_j."""
    b, c = k.b, k.c
    return sum(-b[i] * c[j] for i in range(k.g) for j in range(i + 1))


def v3_gauss(k: ConwayForm) -> Fraction:
    """4v3 from the printed double sum (1/2)(sum -b_i^2 c_j + sum b_i c_j^2), j <= i.

    This agrees with the Jones-polynomial definition only in genus one; see
    :func:`v3_gauss_partial_sums` for the version that agrees everywhere.
    """
    b, c = k.b, k.c
    total = sum(-b[i] ** 2 * c[j] + b[i] * c[j] ** 2 for i in range(k.g) for j in range(i + 1))
    return Fraction(total, 2)


def v3_gauss_partial_sums(k: ConwayForm) -> Fraction:
    """4v3 = (1/2)(sum_i b_i (c_1+...+c_i)^2 - sum_j c_j (b_j+...+b_g)^2).

    Squares of partial sums instead of sums of squares; matches the Jones
    definition on every form we have checked.
    """
    b, c = k.b, k.c
    g = k.g
    first = sum(b[i] * sum(c[: i + 1]) ** 2 for i in range(g))
    second = sum(-c[j] * sum(b[j:]) ** 2 for j in range(g))
    return Fraction(first + second, 2)


class FamilyId(str, enum.Enum):
    BG_CHAIN = "bg_chain"
    GENUS4_TWO_PARAM = "genus4_two_param"
    GENUS2_GENERAL = "genus2_general"
    GENUS2_A = "genus2_a"
    GENUS2_B = "genus2_b"
    GENUS3_Y = "genus3_y"
    GENUS3_X = "genus3_x"
    GENUS3_FINAL = "genus3_final"


FAMILY_ARITY: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.BG_CHAIN: ("b_g", "g"),
    FamilyId.GENUS4_TWO_PARAM: ("b_g", "c_1", "g"),
    FamilyId.GENUS2_GENERAL: ("x", "y", "z", "w"),
    FamilyId.GENUS2_A: ("x", "w"),
    FamilyId.GENUS2_B: ("x",),
    FamilyId.GENUS3_Y: ("x", "v"),
    FamilyId.GENUS3_X: ("x", "v"),
    FamilyId.GENUS3_FINAL: ("x", "v"),
}

# (family, field) pairs whose printed closed form is known not to match the
# invariant it names.  The engine value is authoritative for these.
KNOWN_MISPRINTS: dict[tuple[FamilyId, str], str] = {
    (FamilyId.GENUS4_TWO_PARAM, "det"): (
        "display uses b_1 and c_g where b_g and c_1 are meant; "
        "see det_corrected"
    ),
    (FamilyId.BG_CHAIN, "four_v3"): "derived from the sum-of-squares 4v3 sum, off for g >= 2",
    (FamilyId.GENUS2_A, "four_v3"): "derived from the sum-of-squares 4v3 sum",
}


@dataclass(frozen=True)
class FamilyRecord:
    family: FamilyId
    params: dict
    form: ConwayForm
    a2: int | None = None
    a4: Fraction | None = None
    four_v3: Fraction | None = None
    det: int | None = None
    extra: dict = field(default_factory=dict)

    def fields(self) -> dict:
        return {
            name: getattr(self, name)
            for name in ("a2", "a4", "four_v3", "det")
            if getattr(self, name) is not None
        }


def _params(family: FamilyId, args, kwargs) -> dict:
    names = FAMILY_ARITY[family]
    if len(args) + len(kwargs) != len(names):
        raise TypeError(f"{family.value} takes parameters {names}, got {args} {kwargs}")
    params = dict(zip(names, args))
    for k, v in kwargs.items():
        if k not in names or k in params:
            raise TypeError(f"{family.value}: unexpected or duplicate parameter {k!r}")
        params[k] = v
    return params


def family_form(family: FamilyId | str, *args, **kwargs) -> ConwayForm:
    family = FamilyId(family)
    p = _params(family, args, kwargs)
    C = ConwayForm.from_entries
    if family is FamilyId.BG_CHAIN:
        g = p["g"]
        return ConwayForm((1,) * (g - 1) + (p["b_g"],), (-1,) * g)
    if family is FamilyId.GENUS4_TWO_PARAM:
        g = p["g"]
        if g < 2:
            raise ValueError("genus4_two_param needs g >= 2")
        return ConwayForm((1,) * (g - 1) + (p["b_g"],), (p["c_1"],) + (-1,) * (g - 1))
    if family is FamilyId.GENUS2_GENERAL:
        return C((2 * p["x"], -2 * p["y"], 2 * p["z"], -2 * p["w"]))
    if family is FamilyId.GENUS2_A:
        return C((2 * p["x"], -2, 2, -2 * p["w"]))
    if family is FamilyId.GENUS2_B:
        return C((2 * p["x"], -4, 2, -2))
    if family is FamilyId.GENUS3_Y:
        return C((2 * p["x"], -2, 4, -2, 2, -2 * p["v"]))
    if family is FamilyId.GENUS3_X:
        return C((2 * p["x"], -4, 2, -2, 2, -2 * p["v"]))
    # printed as C[2x,2,-2,2,-2,-2v]; read with the positive sign pattern
    return C((2 * p["x"], -2, 2, -2, 2, -2 * p["v"]))


def family_closed_form(family: FamilyId | str, *args, **kwargs) -> FamilyRecord:
    """Evaluate the printed closed forms of a family at the given parameters."""
    family = FamilyId(family)
    p = _params(family, args, kwargs)
    if any(not isinstance(v, int) for v in p.values()):
        raise TypeError("family parameters must be integers")
    form = family_form(family, **p)
    F = Fraction
    if family is FamilyId.BG_CHAIN:
        b, g = p["b_g"], p["g"]
        return FamilyRecord(
            family, p, form,
            a2=int(F((2 * b + g - 1) * g, 2)),
            a4=F((4 * b + g - 2) * g * (g * g - 1), 24),
            four_v3=F(g * (b * b + b + g - 1), 2),
            det=4 * b * g - 2 * g + 1,
        )
    if family is FamilyId.GENUS4_TWO_PARAM:
        b, c, g = p["b_g"], p["c_1"], p["g"]
        # literal display: b_1 and c_g take their family values 1 and -1
        b1, cg = 1, -1
        det_literal = -8 * b * c * g + 4 * b1 * c - 4 * b * g + 4 * c * g + 4 * b - 4 * cg + 2 * g - 3
        det_corrected = -8 * b * c * g + 4 * b * c - 4 * b * g + 4 * c * g + 4 * b - 4 * c + 2 * g - 3
        a2 = F(-2 * b * c + 2 * b * g - 2 * c * g - 2 * b + 2 * c + g * g - 3 * g + 2, 2)
        return FamilyRecord(
            family, p, form, a2=int(a2), det=det_literal,
            extra={"det_corrected": det_corrected},
        )
    if family is FamilyId.GENUS2_GENERAL:
        x, y, z, w = p["x"], p["y"], p["z"], p["w"]
        return FamilyRecord(
            family, p, form,
            a2=z * w + x * w + x * y,
            det=16 * x * y * z * w - 4 * y * x - 4 * z * w - 4 * x * w + 1,
        )
    if family is FamilyId.GENUS2_A:
        x, w = p["x"], p["w"]
        return FamilyRecord(
            family, p, form,
            a2=x * w + x + w,
            a4=F(x * w),
            four_v3=F(x * x * w + w * w * x + x * x + w * w + x + w, 2),
            det=12 * x * w - 4 * x - 4 * w + 1,
        )
    if family is FamilyId.GENUS2_B:
        # general genus-2 displays at y = 2, z = w = 1
        rec = family_closed_form(FamilyId.GENUS2_GENERAL, p["x"], 2, 1, 1)
        return replace(rec, family=family, params=p, form=form)
    x, v = p["x"], p["v"]
    if family is FamilyId.GENUS3_Y:
        return FamilyRecord(family, p, form, a2=x * v + 2 * x + 3 * v + 2, det=68 * x * v - 24 * x - 20 * v + 7)
    if family is FamilyId.GENUS3_X:
        return FamilyRecord(family, p, form, a2=x * v + 2 * v + 3 * x + 1, det=52 * x * v - 20 * x - 8 * v + 3)
    return FamilyRecord(family, p, form, a2=x * v + 2 * x + 2 * v + 1, det=20 * x * v - 8 * x - 8 * v + 3)


def engine_values(k: ConwayForm) -> dict:
    return {
        "a2": seifert.a2(k),
        "a4": seifert.a4(k),
        "four_v3": 4 * jones.v3_from_jones(k),
        "det": conway.determinant(k),
    }


def compare_family(family: FamilyId | str, *args, **kwargs) -> list[dict]:
    """Fields where the printed closed form and the engine disagree.

    Each entry carries ``known_misprint`` so callers can separate the
    expected discrepancies from new ones.
    """
    rec = family_closed_form(family, *args, **kwargs)
    eng = engine_values(rec.form)
    out = []
    for name, printed in rec.fields().items():
        if printed != eng[name]:
            out.append({
                "family": rec.family.value,
                "params": rec.params,
                "form": str(rec.form),
                "field": name,
                "printed": printed,
                "engine": eng[name],
                "known_misprint": (rec.family, name) in KNOWN_MISPRINTS,
            })
    if "det_corrected" in rec.extra and rec.extra["det_corrected"] != eng["det"]:
        out.append({
            "family": rec.family.value,
            "params": rec.params,
            "form": str(rec.form),
            "field": "det_corrected",
            "printed": rec.extra["det_corrected"],
            "engine": eng["det"],
            "known_misprint": False,
        })
    return out


def genus2_expression(x: int, y: int, z: int, w: int) -> int:
    return 4 * x * y * z * w - 3 * y * x - 3 * z * w - 3 * x * w + 2


def genus2_criterion(x: int, y: int, z: int, w: int, strict: bool = False) -> bool:
    """The genus-two main-obstruction test for C[2x,-2y,2z,-2w].

    The default ``>= 0`` is the printed inequality; ``strict=True`` is the
    form equivalent to the main obstruction itself.
    """
    e = genus2_expression(x, y, z, w)
    return e > 0 if strict else e >= 0
