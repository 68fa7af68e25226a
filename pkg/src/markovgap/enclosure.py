"""Directed-rounding enclosures with exact rational endpoints.

All certified quantities in this package are carried as closed intervals
[lo, hi] whose endpoints are exact ``Fraction`` values.  Rational arithmetic
on endpoints is exact; width is introduced only by the irrational primitives
(square root, log, exp), each of which returns a guaranteed enclosure:

* square roots are bounded via ``math.isqrt`` on scaled integers,
* log/exp go through ``decimal``, whose results are correctly rounded, and
  are then nudged outward by one ulp.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_CEILING, ROUND_FLOOR
from fractions import Fraction
from math import isqrt
from typing import Union

RationalLike = Union[int, Fraction]

#: Default number of decimal digits carried by enclosures.
DEFAULT_DIGITS = 50

_GUARD = 8


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Decimal):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo={self.lo} > hi={self.hi}")

    @staticmethod
    def exact(x) -> "Enclosure":
        x = _to_fraction(x)
        return Enclosure(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        q = _to_fraction(other)
        return Enclosure(self.lo + q, self.hi + q)

    __radd__ = __add__

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __sub__(self, other) -> "Enclosure":
        if isinstance(other, Enclosure):
            return self + (-other)
        return self + (-_to_fraction(other))

    def __rsub__(self, other) -> "Enclosure":
        return (-self) + _to_fraction(other)

    def scale(self, q) -> "Enclosure":
        q = _to_fraction(q)
        if q >= 0:
            return Enclosure(self.lo * q, self.hi * q)
        return Enclosure(self.hi * q, self.lo * q)

    def reciprocal(self) -> "Enclosure":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("enclosure straddles zero")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def contains(self, x) -> bool:
        x = _to_fraction(x)
        return self.lo <= x <= self.hi

    def strictly_below(self, other) -> bool:
        """Certified ``self < other`` (other may be Enclosure or rational)."""
        if isinstance(other, Enclosure):
            return self.hi < other.lo
        return self.hi < _to_fraction(other)

    def strictly_above(self, other) -> bool:
        if isinstance(other, Enclosure):
            return self.lo > other.hi
        return self.lo > _to_fraction(other)

    def sign(self) -> int:
        """-1, 0 (undecided: interval straddles zero), or +1."""
        if self.hi < 0:
            return -1
        if self.lo > 0:
            return 1
        return 0

    def decimal_str(self, digits: int = 12) -> str:
        """Display as a decimal; exact endpoints shown rounded outward."""
        ctx_f = Context(prec=digits, rounding=ROUND_FLOOR)
        ctx_c = Context(prec=digits, rounding=ROUND_CEILING)
        lo = ctx_f.divide(Decimal(self.lo.numerator), Decimal(self.lo.denominator))
        hi = ctx_c.divide(Decimal(self.hi.numerator), Decimal(self.hi.denominator))
        if lo == hi:
            return str(lo)
        return f"[{lo}, {hi}]"


def frac_pow10(exponent: int) -> Fraction:
    if exponent >= 0:
        return Fraction(10 ** exponent)
    return Fraction(1, 10 ** (-exponent))


def sqrt_enclosure(x, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of sqrt(x) for rational x >= 0, width <= 2*10^-digits."""
    x = _to_fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Enclosure.exact(0)
    scale = 10 ** digits
    # floor(sqrt(x)*scale) via isqrt of floor(x*scale^2)
    n = x.numerator * scale * scale // x.denominator
    r = isqrt(n)
    lo = Fraction(r, scale)
    hi = Fraction(r + 1, scale)
    return Enclosure(lo, hi)


def _dec_bounds(x: Fraction, ctx_f: Context, ctx_c: Context):
    n, d = Decimal(x.numerator), Decimal(x.denominator)
    return ctx_f.divide(n, d), ctx_c.divide(n, d)


def _nudge(value: Decimal) -> Fraction:
    """One ulp of `value` at its own exponent, as an exact Fraction."""
    exp = value.as_tuple().exponent
    return frac_pow10(exp)


def ln_enclosure(x, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of ln(x) for rational x > 0.

    decimal's ln() is correctly rounded, so a one-ulp outward nudge of the
    results at directed-rounded arguments is a valid enclosure.
    """
    x = _to_fraction(x)
    if x <= 0:
        raise ValueError("ln of non-positive rational")
    prec = digits + _GUARD
    ctx_f = Context(prec=prec, rounding=ROUND_FLOOR)
    ctx_c = Context(prec=prec, rounding=ROUND_CEILING)
    x_lo, x_hi = _dec_bounds(x, ctx_f, ctx_c)
    ln_lo = ctx_f.ln(x_lo)
    ln_hi = ctx_c.ln(x_hi)
    return Enclosure(Fraction(ln_lo) - _nudge(ln_lo), Fraction(ln_hi) + _nudge(ln_hi))


def exp_enclosure(x, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of exp(x) for rational x."""
    x = _to_fraction(x)
    prec = digits + _GUARD
    ctx_f = Context(prec=prec, rounding=ROUND_FLOOR)
    ctx_c = Context(prec=prec, rounding=ROUND_CEILING)
    x_lo, x_hi = _dec_bounds(x, ctx_f, ctx_c)
    e_lo = ctx_f.exp(x_lo)
    e_hi = ctx_c.exp(x_hi)
    lo = Fraction(e_lo) - _nudge(e_lo)
    hi = Fraction(e_hi) + _nudge(e_hi)
    return Enclosure(max(lo, Fraction(0)), hi)


def pow_enclosure(base, exponent, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of base**exponent with base > 0 and exponent rational >= 0.

    Monotone in the base for positive exponents, so endpoint evaluation of
    exp(exponent*ln(base)) is enough.
    """
    exponent = _to_fraction(exponent)
    if exponent < 0:
        raise ValueError("negative exponents not supported")
    if isinstance(base, Enclosure):
        b_lo, b_hi = base.lo, base.hi
    else:
        b_lo = b_hi = _to_fraction(base)
    if b_lo <= 0:
        raise ValueError("pow_enclosure requires a positive base")
    if exponent == 0:
        return Enclosure.exact(1)
    lo = exp_enclosure(ln_enclosure(b_lo, digits).lo * exponent, digits).lo
    hi = exp_enclosure(ln_enclosure(b_hi, digits).hi * exponent, digits).hi
    return Enclosure(lo, hi)
