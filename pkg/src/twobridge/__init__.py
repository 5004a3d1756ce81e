"""Exact invariants of positive 2-bridge knots and chirally cosmetic surgery obstructions."""

from .conway import ConwayForm, parse

__all__ = ["ConwayForm", "parse"]
__version__ = "0.1.0"
