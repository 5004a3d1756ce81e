"""Conway normal forms of positive 2-bridge knots.

A form ``C[2b_g, 2c_g, ..., 2b_1, 2c_1]`` is written outermost pair first,
but stored innermost first: ``b[0]`` is ``b_1`` and ``c[0]`` is ``c_1``.
Every routine below indexes pairs 1..g the same way, so ``truncate(k, j)``
keeps ``b[:j]`` and ``c[:j]``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

__all__ = [
    "ConwayError",
    "ConwayParseError",
    "ConwayValidationError",
    "ConwayForm",
    "TwoBridgeFraction",
    "Move",
    "parse",
    "mirror_symmetry",
    "canonical_key",
    "fraction",
    "fractions",
    "determinant",
    "truncate",
    "neighbor",
    "is_torus_2k",
    "delta",
    "torus_form",
]


class ConwayError(ValueError):
    """Base class for malformed or invalid Conway forms."""


class ConwayParseError(ConwayError):
    pass


class ConwayValidationError(ConwayError):
    pass


class Move(str, enum.Enum):
    B_PLUS = "b_plus"
    C_MINUS = "c_minus"


@dataclass(frozen=True)
class ConwayForm:
    """A positive Conway form; ``b`` and ``c`` are stored innermost first."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if not b or len(b) != len(c):
            raise ConwayValidationError(f"need g >= 1 pairs with len(b) == len(c), got b={b}, c={c}")
        if any(x < 1 for x in b):
            raise ConwayValidationError(f"every b_i must be >= 1 for a positive diagram, got {b}")
        if any(x > -1 for x in c):
            raise ConwayValidationError(f"every c_i must be <= -1 for a positive diagram, got {c}")

    @property
    def g(self) -> int:
        return len(self.b)

    @property
    def complexity(self) -> int:
        """s(K) = sum(b_i - c_i), half the crossing number of the diagram."""
        return sum(self.b) - sum(self.c)

    @property
    def crossings(self) -> int:
        return 2 * self.complexity

    def entries(self) -> tuple[int, ...]:
        """Twist parameters in bracket order: (2b_g, 2c_g, ..., 2b_1, 2c_1)."""
        out = []
        for bi, ci in zip(reversed(self.b), reversed(self.c)):
            out.extend((2 * bi, 2 * ci))
        return tuple(out)

    def key(self) -> str:
        return "g={};b={};c={}".format(
            self.g, ",".join(map(str, self.b)), ",".join(map(str, self.c))
        )

    def __str__(self):
        return "C[" + ",".join(map(str, self.entries())) + "]"

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> ConwayForm:
        """Build from bracket-order entries (2b_g, 2c_g, ..., 2b_1, 2c_1)."""
        entries = list(entries)
        if not entries or len(entries) % 2:
            raise ConwayValidationError(f"need an even, non-zero number of entries, got {len(entries)}")
        for x in entries:
            if x == 0:
                raise ConwayValidationError("zero entries are not allowed")
            if x % 2:
                raise ConwayValidationError(f"entry {x} is odd; all twist counts must be even")
        for pos, x in enumerate(entries):
            if (pos % 2 == 0 and x < 0) or (pos % 2 == 1 and x > 0):
                raise ConwayValidationError(
                    f"sign pattern must alternate +,-,+,-,... starting positive; entry {pos} is {x}"
                )
        outer_b = entries[0::2]
        outer_c = entries[1::2]
        return cls(tuple(x // 2 for x in reversed(outer_b)), tuple(x // 2 for x in reversed(outer_c)))


_BRACKET = re.compile(r"^\s*C?\s*\[(.*)\]\s*$")


def parse(text: str) -> ConwayForm:
    """Parse ``"2b_g,2c_g,...,2b_1,2c_1"`` (optionally wrapped in ``C[...]``)."""
    m = _BRACKET.match(text)
    body = m.group(1) if m else text
    body = body.replace("−", "-")
    parts = [p.strip() for p in body.split(",")]
    try:
        entries = [int(p) for p in parts]
    except ValueError as exc:
        raise ConwayParseError(f"cannot parse {text!r} as a comma-separated list of integers") from exc
    return ConwayForm.from_entries(entries)


def mirror_symmetry(k: ConwayForm) -> ConwayForm:
    """C[2b_g,...,2c_1] -> C[-2c_1,-2b_1,...,-2c_g,-2b_g]; the same knot."""
    return ConwayForm(tuple(-x for x in reversed(k.c)), tuple(-x for x in reversed(k.b)))


def canonical_key(k: ConwayForm) -> tuple[int, ...]:
    return min(k.entries(), mirror_symmetry(k).entries())


class TwoBridgeFraction(NamedTuple):
    d: int
    p: int


def fractions(k: ConwayForm) -> list[TwoBridgeFraction]:
    """All (d_j, p_j) for j = 0..g, with d_0 = 1, p_0 = 0."""
    d, p = 1, 0
    out = [TwoBridgeFraction(d, p)]
    for bi, ci in zip(k.b, k.c):
        d, p = (-4 * bi * ci - 1) * d - 2 * bi * p, -2 * ci * d - p
        out.append(TwoBridgeFraction(d, p))
    return out


def _check_index(k: ConwayForm, j: int) -> None:
    if not 1 <= j <= k.g:
        raise IndexError(f"index {j} out of range 1..{k.g}")


def fraction(k: ConwayForm, j: int) -> TwoBridgeFraction:
    _check_index(k, j)
    return fractions(k)[j]


def determinant(k: ConwayForm) -> int:
    return fractions(k)[-1].d


def truncate(k: ConwayForm, j: int) -> ConwayForm:
    _check_index(k, j)
    return ConwayForm(k.b[:j], k.c[:j])


def neighbor(k: ConwayForm, i: int, kind: Move | str) -> ConwayForm:
    """K^{b_i+} or K^{c_i-}: add one full twist to the i-th pair (innermost is 1)."""
    _check_index(k, i)
    kind = Move(kind)
    b, c = list(k.b), list(k.c)
    if kind is Move.B_PLUS:
        b[i - 1] += 1
    else:
        c[i - 1] -= 1
    return ConwayForm(tuple(b), tuple(c))


def is_torus_2k(k: ConwayForm) -> bool:
    return all(x == 1 for x in k.b) and all(x == -1 for x in k.c)


def delta(k: ConwayForm) -> int:
    return k.complexity - 2 * k.g


def torus_form(g: int) -> ConwayForm:
    """C[2,-2,...,2,-2] with g pairs, the (2, 2g+1) torus knot."""
    return ConwayForm((1,) * g, (-1,) * g)

