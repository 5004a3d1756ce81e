"""Surgery obstructions for positive 2-bridge knots and the per-knot verdict.

A chirally cosmetic pair S^3_K(p/q) = -S^3_K(p/q') forces two different
expressions for p/(q+q'): one from the degree-two LMO invariant and one
from Heegaard Floer homology.  Each is a function of det, g, a2, a4 and v3,
so every comparison here is exact.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import conway, jones, seifert, torus_sig
from .conway import ConwayForm

__all__ = [
    "Verdict",
    "Invariants",
    "invariants",
    "ObstructionReport",
    "DensityEstimate",
    "slope_candidate_lmo",
    "slope_candidate_hf",
    "equality_obstruction",
    "main_obstruction",
    "main_threshold",
    "cw_cg_relation",
    "signature_density",
    "known_ccs_slopes",
    "known_ccs_slopes_unreduced",
    "verdict",
]


class Verdict(str, enum.Enum):
    EXCLUDED_TORUS_2K = "excluded_torus_2k"
    NO_CCS_MAIN = "no_ccs_main"
    NO_CCS_EQUALITY = "no_ccs_equality"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Invariants:
    g: int
    det: int
    a2: int
    a4: int
    four_v3: int


@functools.lru_cache(maxsize=None)
def invariants(k: ConwayForm) -> Invariants:
    """det from the fraction recurrence, a2/a4 from nabla, 4v3 from the Jones polynomial."""
    fv = 4 * jones.v3_from_jones(k)
    if fv.denominator != 1:
        raise AssertionError(f"4v3({k}) = {fv} is not an integer")
    return Invariants(k.g, conway.determinant(k), seifert.a2(k), seifert.a4(k), int(fv))


def _lmo(inv: Invariants) -> Fraction:
    assert inv.four_v3 != 0, "4v3 vanishes; not a positive form"
    return Fraction(7 * inv.a2 ** 2 - inv.a2 - 10 * inv.a4, 2 * inv.four_v3)


def _hf_numerator(inv: Invariants) -> int:
    return inv.det + 6 * inv.g - 5


def slope_candidate_lmo(k: ConwayForm) -> Fraction:
    """p/(q+q') = (7a2^2 - a2 - 10a4) / (2 * 4v3)."""
    return _lmo(invariants(k))


def slope_candidate_hf(k: ConwayForm) -> Fraction:
    """p/(q+q') = (det + 6g - 5) / 4."""
    return Fraction(_hf_numerator(invariants(k)), 4)


def equality_obstruction(k: ConwayForm) -> bool:
    """True when the two slope candidates disagree, so no chirally cosmetic pair exists."""
    inv = invariants(k)
    return 4 * _lmo(inv) != _hf_numerator(inv)


def main_threshold(g: int) -> Fraction:
    """Multiplier of a2 on the right-hand side of the main inequality."""
    return Fraction(176, 10 * g) if g >= 6 else Fraction(16, g)


def _main(inv: Invariants) -> bool:
    return _hf_numerator(inv) > main_threshold(inv.g) * inv.a2


def main_obstruction(k: ConwayForm) -> bool:
    """det + 6g - 5 > 176 a2 / (10 g) for g >= 6, > 16 a2 / g for g <= 5."""
    return _main(invariants(k))


def cw_cg_relation(k: ConwayForm, p: int, qsum: int) -> bool:
    """12 (q+q') a2 == 3 sigma(K, p)."""
    if qsum == 0:
        raise ValueError("q + q' must be non-zero")
    if p < 2:
        raise ValueError("p must be at least 2")
    return 12 * qsum * seifert.a2(k) == 3 * seifert.total_signature(k, p)


@dataclass(frozen=True)
class DensityEstimate:
    """sigma(K,p)/(g p) over the finite window N <= p <= p_max.

    ``window_min`` is an upper bound for the lower density restricted to
    p >= N, ``window_max`` a lower bound for the upper one.
    ``torus_lower_bound`` is the torus knot T(2,2g+1) ratio minimized over
    the same window; at N = 11 it is replaced by the analytic floor when
    that is smaller, so it stays a bound valid for every p >= 11.
    """

    N: int
    p_max: int
    window_min: Fraction
    window_max: Fraction
    torus_lower_bound: Fraction
    analytic_floor: Fraction | None = None


def signature_density(k: ConwayForm, N: int, p_max: int) -> DensityEstimate:
    if not 2 <= N <= p_max:
        raise ValueError("need 2 <= N <= p_max")
    g = k.g
    ratios = [Fraction(abs(seifert.total_signature(k, p)), g * p) for p in range(N, p_max + 1)]
    torus = min(Fraction(torus_sig.total_sig_torus_2_odd(g, p), g * p) for p in range(N, p_max + 1))
    floor = None
    if N == 11:
        floor = torus_sig.density_floor(g)
        torus = min(torus, floor)
    return DensityEstimate(N, p_max, min(ratios), max(ratios), torus, floor)


def known_ccs_slopes_unreduced(kparam: int, m: int) -> tuple[tuple[int, int], tuple[int, int]]:
    if kparam < 3 or kparam % 2 == 0:
        raise ValueError("k must be an odd integer >= 3")
    num = 2 * kparam ** 2 * (2 * m + 1)
    return (num, kparam * (2 * m + 1) + 1), (num, kparam * (2 * m + 1) - 1)


def known_ccs_slopes(kparam: int, m: int) -> tuple[Fraction, Fraction]:
    """The chirally cosmetic pair of slopes on the (2,k)-cable family, in lowest terms."""
    (n1, d1), (n2, d2) = known_ccs_slopes_unreduced(kparam, m)
    return Fraction(n1, d1), Fraction(n2, d2)


@dataclass(frozen=True)
class ObstructionReport:
    key: str
    g: int
    det: int
    a2: int
    a4: int
    four_v3: int
    slope_lmo: Fraction
    slope_hf: Fraction
    main_ineq: bool
    equality_violated: bool
    density_window: tuple | None
    verdict: Verdict
    hypotheses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["slope_lmo"] = str(self.slope_lmo)
        d["slope_hf"] = str(self.slope_hf)
        if self.density_window is not None:
            lo, hi, pr = self.density_window
            d["density_window"] = {"min": str(lo), "max": str(hi), "p_range": list(pr)}
        return d


def verdict(k: ConwayForm, density: tuple[int, int] | None = None) -> ObstructionReport:
    """Step A (main inequality), then step B (slope equality).

    ``density=(N, p_max)`` attaches an informational signature window; it
    never affects the verdict.
    """
    inv = invariants(k)
    torus = conway.is_torus_2k(k)
    main = _main(inv)
    eq = 4 * _lmo(inv) != _hf_numerator(inv)
    if torus:
        v = Verdict.EXCLUDED_TORUS_2K
        hyp = {}
    else:
        assert inv.a2 > 1, f"a2({k}) = {inv.a2}"
        assert inv.four_v3 > 0, f"4v3({k}) = {inv.four_v3}"
        # thin, not an L-space knot and g = tau hold for every non-torus
        # positive 2-bridge knot; they are recorded, not computed
        hyp = {"a2_gt_1": True, "four_v3_pos": True, "hf_thin": True, "not_l_space": True, "genus_eq_tau": True}
        if main:
            v = Verdict.NO_CCS_MAIN
        elif eq:
            v = Verdict.NO_CCS_EQUALITY
        else:
            v = Verdict.INCONCLUSIVE
    window = None
    if density is not None:
        est = signature_density(k, *density)
        window = (est.window_min, est.window_max, tuple(density))
    return ObstructionReport(
        key=k.key(), g=inv.g, det=inv.det, a2=inv.a2, a4=inv.a4, four_v3=inv.four_v3,
        slope_lmo=_lmo(inv), slope_hf=Fraction(_hf_numerator(inv), 4),
        main_ineq=main, equality_violated=eq, density_window=window, verdict=v, hypotheses=hyp,
    )
