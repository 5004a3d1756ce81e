"""Signatures of torus links T(q, n) from the Gordon-Litherland-Murasugi recursion."""

from __future__ import annotations

import functools
from fractions import Fraction

__all__ = [
    "a_parity",
    "b_parity",
    "normalize",
    "sigma_torus",
    "lower_bound",
    "upper_bound",
    "check_bounds",
    "total_sig_torus_2_odd",
    "density_floor",
]


def a_parity(q: int) -> int:
    return 1 if q % 2 else 2


def b_parity(q: int, n: int) -> Fraction:
    return Fraction(1, 2) if q % 2 == 1 and n % 2 == 0 else Fraction(0)


def normalize(q: int, n: int) -> tuple[int, int]:
    if q < 1 or n < 1:
        raise ValueError(f"torus link parameters must be positive, got ({q}, {n})")
    return (q, n) if q <= n else (n, q)


@functools.lru_cache(maxsize=None)
def _sigma(q: int, n: int) -> int:
    # q <= n here
    if q == 1:
        return 0
    a = a_parity(q)
    if n == q:
        return (q * q - a) // 2
    if n < 2 * q:
        return q * q - a - _sigma(*normalize(q, 2 * q - n))
    if n == 2 * q:
        return q * q - 1
    return _sigma(*normalize(q, n - 2 * q)) + q * q + a - 2


def sigma_torus(q: int, n: int) -> int:
    """Signature of T(q, n), positive for positive torus links."""
    return _sigma(*normalize(q, n))


def lower_bound(q: int, n: int) -> Fraction:
    return Fraction((q - 1) * n, 2)


def upper_bound(q: int, n: int) -> Fraction:
    return Fraction(q * (n + 1), 2) - a_parity(q) - b_parity(q, n)


def check_bounds(q: int, n: int) -> bool:
    """(q-1)n/2 <= sigma(T(q,n)) <= q(n+1)/2 - a(q) - b(q,n), for 1 <= q <= n."""
    if not 1 <= q <= n:
        raise ValueError(f"need 1 <= q <= n, got ({q}, {n})")
    s = sigma_torus(q, n)
    return lower_bound(q, n) <= s <= upper_bound(q, n)


def total_sig_torus_2_odd(g: int, p: int) -> int:
    """Total p-signature of T(2, 2g+1), equal to the signature of T(2g+1, p)."""
    if g < 1 or p < 2:
        raise ValueError("need g >= 1 and p >= 2")
    return sigma_torus(2 * g + 1, p)


def density_floor(g: int) -> Fraction:
    """Lower bound for sigma(T(2,2g+1), p) / (p g) over p >= 11."""
    return Fraction(1) if g <= 5 else Fraction(10, 11)
