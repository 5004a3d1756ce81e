"""Grid sizes for the replay of the named cases, read from a key = value file."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, fields, replace
from pathlib import Path

__all__ = ["GridConfig", "DEFAULT", "LARGE", "load_config"]


@dataclass(frozen=True)
class GridConfig:
    genus2_a_max: int = 20          # C[2x,-2,2,-2w], x, w <= this
    genus2_b_max: int = 20          # C[2x,-4,2,-2]
    genus2_strict_max: int = 6      # strict criterion vs main inequality
    genus2_routine_max: int = 8     # sufficient conditions (a), (b), (c)
    genus3_lemma_max: int = 10      # two lemma families
    genus3_final_max: int = 20      # C[2x,-2,2,-2,2,-2v]
    chain_g_min: int = 4
    chain_g_max: int = 10
    chain_b_max: int = 20
    delta_one_g_max: int = 9
    closed_form_max: int = 8        # each family parameter 1..this


DEFAULT = GridConfig()
LARGE = GridConfig(
    genus2_a_max=40, genus2_b_max=60, genus2_strict_max=10, genus2_routine_max=14,
    genus3_lemma_max=25, genus3_final_max=40, chain_g_max=16, chain_b_max=40, delta_one_g_max=14,
    closed_form_max=10,
)


def load_config(path: str | Path, base: GridConfig = DEFAULT) -> GridConfig:
    """Read ``name = value`` lines; unknown names are an error."""
    parser = configparser.ConfigParser()
    parser.read_string("[grid]\n" + Path(path).read_text())
    known = {f.name for f in fields(GridConfig)}
    values = {}
    for name, raw in parser["grid"].items():
        if name not in known:
            raise ValueError(f"unknown grid setting {name!r}")
        values[name] = int(raw)
    return replace(base, **values)
