"""Checks for the induction on neighbor moves K -> K^{b_i+}, K^{c_i-}.

If K satisfies the main inequality and the move raises det by at least
threshold(g) times the increase in a2, the neighbor satisfies it too.
The lemma bounds below make that ratio computable from g and i alone.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import conway, obstruction, seifert
from .conway import ConwayForm, Move

log = logging.getLogger(__name__)

__all__ = [
    "BoundViolation",
    "MoveDelta",
    "move_delta",
    "lemma_bound",
    "first_estimate",
    "xy_sequence",
    "claim_xy_check",
    "StepOutcome",
    "induction_step",
    "step_outcome",
]


class BoundViolation(AssertionError):
    """A stated inequality failed on a concrete form."""


@dataclass(frozen=True)
class MoveDelta:
    i: int
    kind: Move
    delta_det: int
    delta_a2: int
    bound: int


def lemma_bound(g: int, i: int, kind: Move | str) -> int:
    return 8 * (g - i) + 4 if Move(kind) is Move.B_PLUS else 8 * i - 4


def move_delta(k: ConwayForm, i: int, kind: Move | str) -> MoveDelta:
    kind = Move(kind)
    n = conway.neighbor(k, i, kind)
    dd = conway.determinant(n) - conway.determinant(k)
    da = seifert.a2(n) - seifert.a2(k)
    bound = lemma_bound(k.g, i, kind)
    if dd < bound * da:
        raise BoundViolation(f"{k} {kind.value} at {i}: delta_det {dd} < {bound} * {da}")
    return MoveDelta(i, kind, dd, da, bound)


def first_estimate(k: ConwayForm) -> bool:
    """det(K) >= sum(-2 b_i c_i) + 1."""
    return conway.determinant(k) >= sum(-2 * b * c for b, c in zip(k.b, k.c)) + 1


def xy_sequence(k: ConwayForm, i: int, kind: Move | str) -> list[tuple[int, int]]:
    """(x_j, y_j) for j = 1..g: differences of d_j and p_j between the neighbor and k."""
    n = conway.neighbor(k, i, kind)
    fk, fn = conway.fractions(k), conway.fractions(n)
    return [(fn[j].d - fk[j].d, fn[j].p - fk[j].p) for j in range(1, k.g + 1)]


def claim_xy_check(k: ConwayForm, i: int, kind: Move | str) -> bool:
    kind = Move(kind)
    conway.neighbor(k, i, kind)  # index check
    xy = xy_sequence(k, i, kind)
    b, c = k.b, k.c
    for j in range(1, k.g + 1):
        x, y = xy[j - 1]
        if j < i:
            if (x, y) != (0, 0):
                return False
            continue
        if j > i:
            px, py = xy[j - 2]
            bj, cj = b[j - 1], c[j - 1]
            if x != (-4 * bj * cj - 1) * px - 2 * bj * py or y != -2 * cj * px - py:
                return False
        if kind is Move.B_PLUS:
            s = -sum(c[:i])
            if x - y < 4 * s or x < (8 * (j - i) + 4) * s:
                return False
        else:
            if x - y < 4 * i - 2 or x < (8 * i - 4) * sum(b[i - 1:j]):
                return False
    return True


class StepOutcome(str, enum.Enum):
    GUARANTEED = "guaranteed"  # ratio meets the threshold
    SLACK = "slack"            # ratio too small, neighbor satisfies the inequality anyway
    FAILS = "fails"            # ratio too small and neighbor violates it


def _ratio_ok(k: ConwayForm, i: int, kind: Move) -> bool:
    md = move_delta(k, i, kind)
    return Fraction(md.delta_det, md.delta_a2) >= obstruction.main_threshold(k.g)


def induction_step(k: ConwayForm, i: int, kind: Move | str) -> bool:
    """Whether the sufficient condition holds for this move.

    Requires the main inequality for ``k``; when the condition holds the
    conclusion for the neighbor is asserted.
    """
    kind = Move(kind)
    if not obstruction.main_obstruction(k):
        raise ValueError(f"{k} does not satisfy the main inequality")
    ok = _ratio_ok(k, i, kind)
    if ok and not obstruction.main_obstruction(conway.neighbor(k, i, kind)):
        raise BoundViolation(f"{k} {kind.value} at {i}: condition holds but neighbor fails")
    return ok


def step_outcome(k: ConwayForm, i: int, kind: Move | str) -> StepOutcome:
    if induction_step(k, i, kind):
        return StepOutcome.GUARANTEED
    if obstruction.main_obstruction(conway.neighbor(k, i, kind)):
        log.info("slack: %s %s at %d passes without the ratio condition", k, Move(kind).value, i)
        return StepOutcome.SLACK
    return StepOutcome.FAILS
