"""Exact quadratic irrationals (a + b*sqrt(d))/c and sums of such.

``Surd`` is closed under field operations within one radicand; values of
eventually periodic continued fractions live here.  ``SurdSum`` carries
linear combinations over distinct square-free radicands (e.g. sqrt2 + sqrt3),
kept symbolic and compared through directed-rounding enclosures; a vanishing
combination is detected structurally, so comparisons always terminate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Tuple, Union

from .enclosure import DEFAULT_DIGITS, Enclosure, sqrt_enclosure

RationalLike = Union[int, Fraction]


# ---------------------------------------------------------------------------
# square-free decomposition


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def _factorize(n: int, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if _is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factorize(d, out)
    _factorize(n // d, out)


def squarefree_decompose(d: int) -> Tuple[int, int]:
    """d = s^2 * core with core square-free; returns (s, core)."""
    if d < 0:
        raise ValueError("negative radicand")
    if d in (0, 1):
        return 1, d
    s, core = 1, 1
    # strip small primes first; Pollard rho handles the rest
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        while d % (p * p) == 0:
            d //= p * p
            s *= p
        if d % p == 0:
            d //= p
            core *= p
    r = isqrt(d)
    if r * r == d:
        return s * r, core
    factors: Dict[int, int] = {}
    _factorize(d, factors)
    for p, e in factors.items():
        s *= p ** (e // 2)
        if e % 2:
            core *= p
    return s, core


# ---------------------------------------------------------------------------
# single-radicand quadratic irrationals


@dataclass(frozen=True)
class Surd:
    """(a + b*sqrt(d)) / c in canonical form.

    Invariants: c > 0, gcd(a, b, c) = 1, d square-free; d == 0 or b == 0
    collapses to the rational a/c (stored with b = 0, d = 0).
    """

    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def make(a: int, b: int, c: int, d: int) -> "Surd":
        if c == 0:
            raise ZeroDivisionError("surd with zero denominator")
        if d < 0:
            raise ValueError("negative radicand")
        s, core = squarefree_decompose(d)
        b *= s
        d = core
        if d in (0, 1):
            a, b, d = a + (b if d == 1 else 0), 0, 0
        if b == 0:
            d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        return Surd(a, b, c, d)

    @staticmethod
    def from_rational(q) -> "Surd":
        q = Fraction(q)
        return Surd.make(q.numerator, 0, q.denominator, 0)

    @staticmethod
    def sqrt_int(d: int) -> "Surd":
        return Surd.make(0, 1, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    # -- field operations (same radicand, or rational operand) --

    def _coerce(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.b != 0 and self.b != 0 and other.d != self.d:
                raise ValueError(
                    f"mixed radicands {self.d} and {other.d}; use SurdSum"
                )
            return other
        return Surd.from_rational(other)

    def __add__(self, other) -> "Surd":
        o = self._coerce(other)
        d = self.d if self.b else o.d
        return Surd.make(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c, self.c * o.c, d)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other) -> "Surd":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Surd":
        return (-self) + other

    def __mul__(self, other) -> "Surd":
        o = self._coerce(other)
        d = self.d if self.b else o.d
        a = self.a * o.a + self.b * o.b * d
        b = self.a * o.b + self.b * o.a
        return Surd.make(a, b, self.c * o.c, d)

    __rmul__ = __mul__

    def reciprocal(self) -> "Surd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("reciprocal of zero surd")
        return Surd.make(self.a * self.c, -self.b * self.c, norm, self.d)

    def __truediv__(self, other) -> "Surd":
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> "Surd":
        return self.reciprocal() * other

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.c, self.d)

    # -- exact ordering --

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d) (c > 0 by canonical form)."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * d
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        return (1 if bigger_rational else -1) * ((a > 0) - (a < 0))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def enclosure(self, digits: int = DEFAULT_DIGITS) -> Enclosure:
        if self.b == 0:
            return Enclosure.exact(Fraction(self.a, self.c))
        root = sqrt_enclosure(self.d, digits + 4)
        return (root.scale(self.b) + self.a).scale(Fraction(1, self.c))

    def __float__(self) -> float:
        e = self.enclosure(24)
        return float(e.mid)

    def __str__(self) -> str:
        if self.b == 0:
            return str(Fraction(self.a, self.c))
        num = f"{self.a}{self.b:+d}*sqrt({self.d})" if self.a else f"{self.b}*sqrt({self.d})"
        return num if self.c == 1 else f"({num})/{self.c}"


# ---------------------------------------------------------------------------
# sums over several radicands


@dataclass(frozen=True)
class SurdSum:
    """sum of coeff*sqrt(d) over square-free d; key d=1 is the rational part."""

    terms: Tuple[Tuple[int, Fraction], ...]  # sorted by d, no zero coeffs

    @staticmethod
    def _from_dict(data: Dict[int, Fraction]) -> "SurdSum":
        items = tuple(sorted((d, q) for d, q in data.items() if q != 0))
        return SurdSum(items)

    @staticmethod
    def of(*parts) -> "SurdSum":
        """Build from any mix of rationals, Surds and SurdSums."""
        data: Dict[int, Fraction] = {}

        def add(d: int, q: Fraction):
            data[d] = data.get(d, Fraction(0)) + q

        for part in parts:
            if isinstance(part, SurdSum):
                for d, q in part.terms:
                    add(d, q)
            elif isinstance(part, Surd):
                add(1, Fraction(part.a, part.c))
                if part.b:
                    add(part.d, Fraction(part.b, part.c))
            else:
                add(1, Fraction(part))
        return SurdSum._from_dict(data)

    @property
    def is_zero(self) -> bool:
        # sqrt(d) over distinct square-free d are linearly independent over Q
        return not self.terms

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self.terms)

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def __add__(self, other) -> "SurdSum":
        return SurdSum.of(self, other)

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum(tuple((d, -q) for d, q in self.terms))

    def __sub__(self, other) -> "SurdSum":
        return SurdSum.of(self, -SurdSum.of(other))

    def __rsub__(self, other) -> "SurdSum":
        return SurdSum.of(other, -self)

    def scale(self, q) -> "SurdSum":
        q = Fraction(q)
        return SurdSum(tuple((d, c * q) for d, c in self.terms)) if q else SurdSum(())

    def enclosure(self, digits: int = DEFAULT_DIGITS) -> Enclosure:
        total = Enclosure.exact(0)
        for d, q in self.terms:
            if d == 1:
                total = total + q
            else:
                total = total + sqrt_enclosure(d, digits + 4).scale(q)
        return total

    def sign(self) -> int:
        if self.is_zero:
            return 0
        digits = DEFAULT_DIGITS
        while digits <= 6400:
            s = self.enclosure(digits).sign()
            if s != 0:
                return s
            digits *= 2
        raise ArithmeticError(f"sign of {self} unresolved at 6400 digits")

    def compare(self, other) -> int:
        return (self - SurdSum.of(other)).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __float__(self) -> float:
        return float(self.enclosure(24).mid)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for d, q in self.terms:
            parts.append(str(q) if d == 1 else f"{q}*sqrt({d})")
        return " + ".join(parts)
