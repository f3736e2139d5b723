"""Exact integer and dyadic-rational kernel.

Every event probability over ``n`` independent fair signs is an integer
divided by ``2**n``.  :class:`DyadicProb` stores exactly that, in canonical
form, so equal probabilities compare equal field by field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Union

__all__ = [
    "DomainError",
    "ResourceError",
    "DyadicProb",
    "binom",
    "dyadic_add",
    "dyadic_sub",
    "dyadic_halve",
    "dyadic_cmp",
    "dyadic_to_decimal",
    "parse_rational",
    "ceil_rational",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured size budget."""


def binom(n: int, j: int) -> int:
    """Binomial coefficient C(n, j); zero outside ``0 <= j <= n``."""
    if n < 0:
        raise DomainError(f"binom requires n >= 0, got {n}")
    if j < 0 or j > n:
        return 0
    j = min(j, n - j)
    c = 1
    # c stays integral: after step i it equals C(n - j + i, i)
    for i in range(1, j + 1):
        c = c * (n - j + i) // i
    return c


@dataclass(frozen=True, slots=True)
class DyadicProb:
    """A probability ``numerator / 2**exponent`` in canonical form.

    Canonical means the numerator is odd, or the value is zero with exponent 0.
    The constructor canonicalizes, so ``DyadicProb(4, 4) == DyadicProb(1, 2)``.
    """

    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0):
        numerator = int(numerator)
        exponent = int(exponent)
        if numerator < 0 or exponent < 0:
            raise DomainError(f"negative dyadic component: {numerator}/2^{exponent}")
        if numerator == 0:
            exponent = 0
        else:
            shift = min((numerator & -numerator).bit_length() - 1, exponent)
            numerator >>= shift
            exponent -= shift
        if numerator > (1 << exponent):
            raise DomainError(f"{numerator}/2^{exponent} exceeds 1")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    @classmethod
    def from_count(cls, count: int, n: int) -> "DyadicProb":
        """Probability of ``count`` favourable patterns out of ``2**n``."""
        return cls(count, n)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "DyadicProb":
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise DomainError(f"{value} is not dyadic")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "DyadicProb":
        """Inverse of ``str``: accepts ``"p/2^e"``, ``"p/q"`` or ``"p"``."""
        text = text.strip()
        if "/2^" in text:
            num, exp = text.split("/2^")
            return cls(int(num), int(exp))
        return cls.from_fraction(Fraction(text))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def scaled_count(self, n: int) -> int:
        """Numerator over the denominator ``2**n`` (requires ``n >= exponent``)."""
        if n < self.exponent:
            raise DomainError(f"2^{n} is not a multiple of 2^{self.exponent}")
        return self.numerator << (n - self.exponent)

    def __float__(self) -> float:
        return math.ldexp(self.numerator, -self.exponent) if self.numerator < (1 << 1000) \
            else float(self.to_fraction())

    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicProb({self.numerator}, {self.exponent})"

    def _key(self, other: "DyadicProb") -> tuple[int, int]:
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent)

    def __add__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        a, b = self._key(other)
        return DyadicProb(a + b, max(self.exponent, other.exponent))

    def __sub__(self, other: "DyadicProb") -> "DyadicProb":
        if not isinstance(other, DyadicProb):
            return NotImplemented
        a, b = self._key(other)
        if a < b:
            raise DomainError(f"{self} - {other} is negative")
        return DyadicProb(a - b, max(self.exponent, other.exponent))

    def halve(self) -> "DyadicProb":
        return DyadicProb(self.numerator, self.exponent + 1)

    def double(self) -> "DyadicProb":
        """``2 * self``; raises :class:`DomainError` above 1."""
        if self.exponent == 0:
            return DyadicProb(2 * self.numerator, 0)
        return DyadicProb(self.numerator, self.exponent - 1)

    def _cmp(self, other) -> int:
        if isinstance(other, DyadicProb):
            a, b = self._key(other)
            return (a > b) - (a < b)
        if isinstance(other, (int, Fraction)):
            f = self.to_fraction()
            return (f > other) - (f < other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, DyadicProb):
            return self.numerator == other.numerator and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other) -> bool:
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0


ZERO = DyadicProb(0)
ONE = DyadicProb(1)


def dyadic_add(a: DyadicProb, b: DyadicProb) -> DyadicProb:
    return a + b


def dyadic_sub(a: DyadicProb, b: DyadicProb) -> DyadicProb:
    return a - b


def dyadic_halve(a: DyadicProb) -> DyadicProb:
    return a.halve()


def dyadic_cmp(a: DyadicProb, b: DyadicProb) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return a._cmp(b)


def dyadic_to_decimal(p: DyadicProb, digits: int = 12) -> str:
    """Render ``p`` with ``digits`` places after the point, rounded half-even.

    The dyadic value has a terminating decimal expansion of ``exponent``
    digits, so the rounding is applied to the exact value.
    """
    if digits < 1:
        raise DomainError("digits must be >= 1")
    with localcontext() as ctx:
        ctx.prec = max(p.exponent, 1) + len(str(p.numerator)) + digits + 5
        exact = Decimal(p.numerator) / (Decimal(2) ** p.exponent)
        return format(exact.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN), "f")


RationalLike = Union[int, Fraction, str, Decimal]


def parse_rational(value: RationalLike) -> Fraction:
    """Exact rational from ``int``, ``Fraction``, ``Decimal`` or a string.

    Strings may be ``"p/q"`` or base-10 decimals; ``"0.3"`` is ``3/10``.
    Binary floats are rejected since their value is rarely what was typed.
    """
    if isinstance(value, bool):
        raise DomainError("bool is not a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise DomainError(f"non-finite value {value}")
        return Fraction(value)
    if isinstance(value, float):
        raise DomainError("floats are not accepted; pass a string or Fraction")
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                return Fraction(text)
            d = Decimal(text)
        except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
            raise DomainError(f"malformed rational {value!r}") from exc
        if not d.is_finite():
            raise DomainError(f"malformed rational {value!r}")
        return Fraction(d)
    raise DomainError(f"cannot interpret {value!r} as a rational")


def ceil_rational(x: Fraction) -> int:
    """Exact ceiling of a rational."""
    return -((-x.numerator) // x.denominator)
