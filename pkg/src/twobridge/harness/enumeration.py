"""Enumeration of positive Conway forms by complexity s(K) = sum(b_i - c_i)."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

from ..conway import ConwayForm, mirror_symmetry

__all__ = ["Dedup", "EnumerationSpec", "enumerate_forms", "forms_of"]


class Dedup(str, enum.Enum):
    NONE = "none"
    SYMMETRY = "symmetry"


@dataclass(frozen=True)
class EnumerationSpec:
    max_complexity: int
    genus_range: tuple[int, int] | None = None
    dedup: Dedup = Dedup.NONE

    def __post_init__(self):
        if self.max_complexity < 2:
            raise ValueError("max_complexity must be at least 2")
        object.__setattr__(self, "dedup", Dedup(self.dedup))
        if self.genus_range is not None:
            lo, hi = self.genus_range
            if not 1 <= lo <= hi:
                raise ValueError(f"bad genus range {self.genus_range}")
            object.__setattr__(self, "genus_range", (int(lo), int(hi)))

    def genera(self, m: int) -> range:
        top = m // 2
        if self.genus_range is None:
            return range(1, top + 1)
        lo, hi = self.genus_range
        return range(lo, min(hi, top) + 1)

    def to_dict(self) -> dict:
        return {
            "max_complexity": self.max_complexity,
            "genus_range": list(self.genus_range) if self.genus_range else None,
            "dedup": self.dedup.value,
        }


def forms_of(m: int, g: int) -> Iterator[ConwayForm]:
    """Forms with s(K) = m and genus g, lexicographic in (|2b_g|, |2c_g|, ..., |2c_1|).

    A composition of m into 2g positive parts is a choice of 2g - 1 cut
    points, so there are binomial(m - 1, 2g - 1) of them.
    """
    n = 2 * g
    for cuts in itertools.combinations(range(1, m), n - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (m,))]
        # parts run outermost first: b_g, -c_g, ..., b_1, -c_1
        bs = tuple(reversed(parts[0::2]))
        cs = tuple(-x for x in reversed(parts[1::2]))
        yield ConwayForm(bs, cs)


def enumerate_forms(spec: EnumerationSpec) -> Iterator[ConwayForm]:
    for m in range(2, spec.max_complexity + 1):
        for g in spec.genera(m):
            for k in forms_of(m, g):
                if spec.dedup is Dedup.SYMMETRY and mirror_symmetry(k).entries() < k.entries():
                    continue
                yield k
