"""Seifert matrix of the plumbed surface, Conway polynomial, and signatures.

The plumbing of the 2g annuli A_{-c_1}, A_{b_1}, ..., A_{-c_g}, A_{b_g}
gives an upper-bidiagonal Seifert matrix: the twisting numbers
``(-c_1, b_1, ..., -c_g, b_g)`` on the diagonal and 1 on the superdiagonal.

Levine-Tristram signatures are the one inexact computation in the package.
They are evaluated with mpmath eigenvalues at a configurable precision and
certified against exact information about the roots of the Alexander
polynomial; see :func:`lt_signature`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .conway import ConwayForm, torus_form
from .exactalg import LaurentPolynomial, bareiss_determinant, cyclotomic_polynomial

__all__ = [
    "PrecisionError",
    "SeifertMatrix",
    "seifert_matrix",
    "conway_polynomial",
    "conway_polynomial_generic",
    "alexander_polynomial",
    "a2",
    "a4",
    "symmetrized_determinant",
    "lt_signature",
    "total_signature",
    "ordinary_signature",
    "DEFAULT_PRECISION",
    "MAX_PRECISION",
]

DEFAULT_PRECISION = 256
MAX_PRECISION = 4096


class PrecisionError(ArithmeticError):
    """Eigenvalue signs could not be certified at the maximum precision."""


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def transpose(self) -> SeifertMatrix:
        n = self.n
        return SeifertMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _twists(k: ConwayForm) -> list[int]:
    out = []
    for bi, ci in zip(k.b, k.c):
        out.extend((-ci, bi))
    return out


def seifert_matrix(k: ConwayForm) -> SeifertMatrix:
    a = _twists(k)
    n = len(a)
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = a[i]
        if i + 1 < n:
            row[i + 1] = 1
        rows.append(tuple(row))
    return SeifertMatrix(tuple(rows))


@functools.lru_cache(maxsize=None)
def conway_polynomial(k: ConwayForm) -> LaurentPolynomial:
    """Continuant recurrence D_m = a_m z D_{m-1} + D_{m-2} on the diagonal twists."""
    z = LaurentPolynomial.monomial(1, var="z")
    prev, cur = LaurentPolynomial({}, "z"), LaurentPolynomial.constant(1, "z")
    for a in _twists(k):
        prev, cur = cur, z * a * cur + prev
    return cur


def conway_polynomial_generic(k: ConwayForm) -> LaurentPolynomial:
    """det(u V - u^{-1} V^T) with u = t^{1/2}, rewritten in z = u - u^{-1}.

    Uses a general fraction-free determinant and never looks at the band
    structure, so it serves as an oracle for :func:`conway_polynomial`.
    """
    v = seifert_matrix(k).entries
    n = len(v)
    u = LaurentPolynomial.monomial(1, var="u")
    uinv = LaurentPolynomial.monomial(-1, var="u")
    mat = [[u * v[i][j] - uinv * v[j][i] for j in range(n)] for i in range(n)]
    det_u = bareiss_determinant(mat)
    return _symmetric_u_to_z(det_u)


def _symmetric_u_to_z(poly: LaurentPolynomial) -> LaurentPolynomial:
    # Peel off leading terms with powers of (u - u^{-1}); requires the
    # polynomial to be a polynomial in u - u^{-1}.
    z_in_u = LaurentPolynomial({1: 1, -1: -1}, var="u")
    rem = poly
    out: dict[int, int] = {}
    while not rem.is_zero():
        top = rem.max_degree()
        if top < 0:
            raise ArithmeticError(f"{poly} is not a polynomial in u - 1/u")
        c = rem.coefficient(top)
        out[top] = c
        rem = rem - (z_in_u ** top) * c
    return LaurentPolynomial(out, var="z")


@functools.lru_cache(maxsize=None)
def alexander_polynomial(k: ConwayForm) -> LaurentPolynomial:
    """Conway-normalized Delta(t): substitute z^2 = t - 2 + t^{-1} into nabla."""
    nabla = conway_polynomial(k)
    z2 = LaurentPolynomial({1: 1, 0: -2, -1: 1})
    out = LaurentPolynomial({}, "t")
    for e, c in nabla.items():
        if e % 2:
            raise ArithmeticError("Conway polynomial of a knot has only even powers")
        out = out + (z2 ** (e // 2)) * c
    return out


def a2(k: ConwayForm) -> int:
    return conway_polynomial(k).coefficient(2)


def a4(k: ConwayForm) -> int:
    return conway_polynomial(k).coefficient(4)


def symmetrized_determinant(k: ConwayForm) -> int:
    """det(V + V^T) by a general integer determinant."""
    v = seifert_matrix(k).entries
    n = len(v)
    return bareiss_determinant([[v[i][j] + v[j][i] for j in range(n)] for i in range(n)])


def _hermitian_form(k: ConwayForm, r: Fraction) -> mpmath.matrix:
    v = seifert_matrix(k).entries
    n = len(v)
    omega = mpmath.expjpi(2 * mpmath.mpf(r.numerator) / r.denominator)
    one_minus = 1 - omega
    one_minus_bar = mpmath.conj(one_minus)
    h = mpmath.matrix(n, n)
    for i in range(n):
        for j in range(n):
            h[i, j] = one_minus * v[i][j] + one_minus_bar * v[j][i]
    return h


def _root_of_alexander(k: ConwayForm, r: Fraction) -> bool:
    # omega = e^{2 pi i r} is a root of Delta iff the cyclotomic polynomial
    # of its order divides Delta.
    return alexander_polynomial(k).divisible_by(cyclotomic_polynomial(r.denominator))


def _normalize_angle(r) -> Fraction:
    r = Fraction(r)
    return r - (r.numerator // r.denominator)


@functools.lru_cache(maxsize=None)
def _lt_signature_cached(k: ConwayForm, r: Fraction, precision: int) -> int:
    if r == 0:
        return 0
    # H(omega-bar) is the complex conjugate of H(omega): same spectrum.
    if r > Fraction(1, 2):
        r = 1 - r
    expected_nullity = 1 if _root_of_alexander(k, r) else 0
    prec = precision
    while prec <= MAX_PRECISION:
        with mpmath.workprec(prec):
            h = _hermitian_form(k, r)
            eig = mpmath.eighe(h, eigvals_only=True)
            tau = mpmath.ldexp(mpmath.mnorm(h, "f"), -prec // 4)
            small = [x for x in eig if abs(x) <= tau]
            if len(small) == expected_nullity:
                pos = sum(1 for x in eig if x > tau)
                neg = sum(1 for x in eig if x < -tau)
                return pos - neg
        prec *= 2
    raise PrecisionError(
        f"signature of {k} at e^(2 pi i {r}) not certified up to {MAX_PRECISION} bits"
    )


def lt_signature(k: ConwayForm, r, precision: int = DEFAULT_PRECISION) -> int:
    """Levine-Tristram signature at omega = e^{2 pi i r}, r rational.

    Signature of H = (1 - omega) V + (1 - conj(omega)) V^T with zero
    eigenvalues dropped.  Eigenvalues with |lambda| <= 2^(-prec/4) ||H||_F
    count as zero; the count of such eigenvalues must match the exact
    nullity (1 when omega is a root of Delta, else 0; H is tridiagonal with
    nonzero off-diagonal so the nullity is at most 1).  On mismatch the
    precision is doubled, and :class:`PrecisionError` is raised past
    ``MAX_PRECISION`` bits.
    """
    return _lt_signature_cached(k, _normalize_angle(r), int(precision))


def total_signature(k: ConwayForm, p: int, precision: int = DEFAULT_PRECISION) -> int:
    """Sum of lt_signature over all p-th roots of unity."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return sum(lt_signature(k, Fraction(j, p), precision) for j in range(p))


def ordinary_signature(k: ConwayForm, precision: int = DEFAULT_PRECISION) -> int:
    return lt_signature(k, Fraction(1, 2), precision)


def torus_total_signature(g: int, p: int, precision: int = DEFAULT_PRECISION) -> int:
    """total_signature of the Conway form of T(2, 2g+1)."""
    return total_signature(torus_form(g), p, precision)
