"""Exact arithmetic kernel.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here ever rounds.  The only type defined locally is
:class:`LaurentPolynomial`, a sparse integer-coefficient polynomial in one
variable that allows negative exponents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "Rational",
    "LaurentPolynomial",
    "cyclotomic_polynomial",
    "bareiss_determinant",
]

Rational = Fraction

Number = Union[int, Fraction]


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Terms are stored as ``{exponent: coefficient}`` with zero coefficients
    dropped, so two polynomials are equal iff their term maps are equal.

    >>> t = LaurentPolynomial.monomial(1)
    >>> (t + 1) * (t - 1)
    LaurentPolynomial({0: -1, 2: 1}, var='t')
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self.var = var
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPolynomial:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "t") -> LaurentPolynomial:
        return cls({exponent: coeff}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0, var: str = "t") -> LaurentPolynomial:
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def items(self):
        return sorted(self._terms.items())

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPolynomial({e * n: c ** (-n)}, self.var)
        result = LaurentPolynomial({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> LaurentPolynomial:
        return LaurentPolynomial({e - 1: e * c for e, c in self._terms.items()}, self.var)

    def __call__(self, x: Number) -> Number:
        if x == 0 and self._terms and min(self._terms) < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        total: Number = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        return total

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def eval_at_minus_one(self) -> int:
        return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())

    # -- exponent rescaling ---------------------------------------------

    def scale_exponents(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Substitute ``x -> x^k``."""
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()}, var or self.var)

    def divide_exponents(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Substitute ``x -> x^(1/k)``; every exponent must be divisible by ``k``."""
        bad = [e for e in self._terms if e % k]
        if bad:
            raise ArithmeticError(f"exponents {sorted(bad)} not divisible by {k}")
        return LaurentPolynomial({e // k: c for e, c in self._terms.items()}, var or self.var)

    def shift(self, n: int) -> LaurentPolynomial:
        """Multiply by ``x^n``."""
        return LaurentPolynomial({e + n: c for e, c in self._terms.items()}, self.var)

    # -- division by a monic polynomial ----------------------------------

    def divmod_monic(self, divisor: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Long division of ``x^m * self`` by a monic ordinary polynomial.

        The dividend is first shifted so its lowest exponent is 0; the
        returned quotient and remainder refer to that shifted polynomial.
        """
        if divisor.is_zero() or divisor.min_degree() < 0 or divisor.coefficient(divisor.max_degree()) != 1:
            raise ValueError("divisor must be a monic ordinary polynomial")
        if self.is_zero():
            zero = LaurentPolynomial({}, self.var)
            return zero, zero
        rem = dict(self.shift(-self.min_degree())._terms)
        dd = divisor.max_degree()
        quot: dict[int, int] = {}
        while rem and max(rem) >= dd:
            top = max(rem)
            c = rem[top]
            q = top - dd
            quot[q] = c
            for e, dc in divisor._terms.items():
                rem[e + q] = rem.get(e + q, 0) - c * dc
                if rem[e + q] == 0:
                    del rem[e + q]
        return LaurentPolynomial(quot, self.var), LaurentPolynomial(rem, self.var)

    def divisible_by(self, divisor: LaurentPolynomial) -> bool:
        return self.divmod_monic(divisor)[1].is_zero()

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Quotient ``self / divisor``, raising ``ArithmeticError`` unless it is an exact Laurent polynomial."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        lead_e = divisor.max_degree()
        lead_c = divisor._terms[lead_e]
        low = divisor.min_degree()
        floor = min(self._terms) - low if self._terms else 0
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e < floor:
                break
            q, r = divmod(rem[top], lead_c)
            if r:
                break
            e = top - lead_e
            quot[e] = q
            for de, dc in divisor._terms.items():
                rem[de + e] = rem.get(de + e, 0) - q * dc
                if rem[de + e] == 0:
                    del rem[de + e]
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return LaurentPolynomial(quot, self.var)

    # -- printing -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{self.var}^{e}" for e, c in sorted(self._terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))}, var={self.var!r})"


_CYCLOTOMIC_CACHE: dict[int, LaurentPolynomial] = {}


def cyclotomic_polynomial(n: int, var: str = "t") -> LaurentPolynomial:
    """The n-th cyclotomic polynomial, by dividing out the proper divisors of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    if n not in _CYCLOTOMIC_CACHE:
        poly = LaurentPolynomial({n: 1, 0: -1})
        for d in range(1, n):
            if n % d == 0:
                poly, rem = poly.divmod_monic(cyclotomic_polynomial(d))
                assert rem.is_zero()
        _CYCLOTOMIC_CACHE[n] = poly
    return LaurentPolynomial(_CYCLOTOMIC_CACHE[n].terms, var)


def bareiss_determinant(rows, exact_div=None):
    """Fraction-free Gaussian elimination over an integral domain.

    ``rows`` is a square matrix of ints or :class:`LaurentPolynomial`;
    ``exact_div(a, b)`` must return the exact quotient (defaults to ``//``
    for ints and :meth:`LaurentPolynomial.exact_div` otherwise).
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if exact_div is None:
        def exact_div(a, b):
            if isinstance(a, LaurentPolynomial):
                return a.exact_div(b)
            q, r = divmod(a, b)
            assert r == 0
            return q

    def is_zero(x):
        return x.is_zero() if isinstance(x, LaurentPolynomial) else x == 0

    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(m[i][k])), None)
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if k == 0 else exact_div(num, prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]
