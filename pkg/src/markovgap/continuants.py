"""Continuant matrices and cylinder intervals, in exact integer arithmetic.

For a word w = (a_1, ..., a_n) the continuant matrix is the product
M(w) = A(a_1)...A(a_n) with A(a) = [[0, 1], [1, a]].  Its entries are the
convergent data of [0; a_1, ..., a_n]:

    M(w) = [[p_{n-1}, p_n], [q_{n-1}, q_n]]

so q obeys the recurrence q_{j+2} = a_{j+2} q_{j+1} + q_j.  The cylinder
I(a_1,...,a_n) of reals starting with these digits has exact length
1/(q_n (q_n + q_{n-1})).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .words import Word, validate_word


@dataclass(frozen=True)
class ContinuantMatrix:
    """[[p_prev, p], [q_prev, q]]; det = p_prev*q - p*q_prev = +-1."""

    p_prev: int
    p: int
    q_prev: int
    q: int

    @staticmethod
    def identity() -> "ContinuantMatrix":
        return ContinuantMatrix(1, 0, 0, 1)

    @staticmethod
    def digit(a: int) -> "ContinuantMatrix":
        if a < 1:
            raise ValueError("digit must be >= 1")
        return ContinuantMatrix(0, 1, 1, a)

    def __mul__(self, other: "ContinuantMatrix") -> "ContinuantMatrix":
        return ContinuantMatrix(
            self.p_prev * other.p_prev + self.p * other.q_prev,
            self.p_prev * other.p + self.p * other.q,
            self.q_prev * other.p_prev + self.q * other.q_prev,
            self.q_prev * other.p + self.q * other.q,
        )

    @property
    def det(self) -> int:
        return self.p_prev * self.q - self.p * self.q_prev

    def mobius(self, x):
        """(p_prev*x + p) / (q_prev*x + q); x may be Fraction or Surd."""
        return (x * self.p_prev + self.p) / (x * self.q_prev + self.q)


def continuants(w: Sequence[int]) -> ContinuantMatrix:
    """Continuant matrix of a word; the empty word gives the identity."""
    validate_word(w)
    p_prev, p, q_prev, q = 1, 0, 0, 1
    for a in w:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return ContinuantMatrix(p_prev, p, q_prev, q)


@dataclass(frozen=True)
class CylinderInterval:
    """The interval I(a_1,...,a_n) = {[0; a_1,...,a_n,rho] : rho > 1}."""

    word: Word
    endpoints: tuple
    length: Fraction

    @property
    def left(self) -> Fraction:
        return min(self.endpoints)

    @property
    def right(self) -> Fraction:
        return max(self.endpoints)

    def contains(self, x) -> bool:
        return self.left <= x <= self.right


def cylinder(w: Sequence[int]) -> CylinderInterval:
    """Cylinder interval of a nonempty word, with exact rational data."""
    w = tuple(w)
    validate_word(w, allow_empty=False)
    m = continuants(w)
    # endpoints [0; a_1..a_n] and [0; a_1..a_n+1] == [0; a_1..a_n, 1]
    e1 = Fraction(m.p, m.q)
    e2 = Fraction(m.p + m.p_prev, m.q + m.q_prev)
    length = Fraction(1, m.q * (m.q + m.q_prev))
    assert abs(e1 - e2) == length
    return CylinderInterval(w, (e1, e2), length)


def cylinder_length(w: Sequence[int]) -> Fraction:
    m = continuants(w)
    return Fraction(1, m.q * (m.q + m.q_prev))


def word_value(w: Sequence[int]) -> Fraction:
    """Exact value of the finite continued fraction [0; w]."""
    m = continuants(w)
    return Fraction(m.p, m.q)
