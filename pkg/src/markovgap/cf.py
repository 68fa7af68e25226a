"""Continued-fraction values and the alternating comparison rule.

Values of eventually periodic expansions [0; pre, per, per, ...] are exact
quadratic surds: the periodic tail is the attracting fixed point of the
period's continuant Mobius map, and the preperiod acts by another Mobius map.

The comparison lemma for continued fractions: if two expansions share digits
up to index n and differ at index n+1, the one with the larger digit there is
larger iff n+1 is even (indices counted from a_0); equivalently the sign of
the difference is (-1)^(n+1) * sign(a_{n+1} - b_{n+1}).  Moreover two values
agreeing to index n differ by less than 1/2^(n-1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .continuants import continuants, cylinder, word_value
from .enclosure import DEFAULT_DIGITS, Enclosure
from .surd import Surd, SurdSum, squarefree_decompose
from .words import validate_word

Value = Union[int, Fraction, Surd, SurdSum]


def eval_periodic(preperiod: Sequence[int], period: Sequence[int]) -> Surd:
    """Exact value of [0; preperiod, period with bar] as a quadratic surd."""
    pre, per = tuple(preperiod), tuple(period)
    validate_word(pre)
    validate_word(per, allow_empty=False)
    m = continuants(per)
    # y = (p_prev*y + p)/(q_prev*y + q), take the positive root
    A = m.q_prev
    B = m.q - m.p_prev
    C = -m.p
    disc = B * B - 4 * A * C
    s, core = squarefree_decompose(disc)
    if core in (0, 1):
        raise ArithmeticError(f"period {per} produced a rational fixed point")
    y = Surd.make(-B, s, 2 * A, core)
    assert y.sign() > 0
    value = continuants(pre).mobius(y)
    return value


def compare_values(x: Value, y: Value) -> int:
    """-1, 0, +1 ordering of two exact values."""
    return SurdSum.of(x).compare(SurdSum.of(y))


class DigitStream:
    """Digit sequence of [0; pre, per...] (per may be empty: finite word)."""

    def __init__(self, preperiod: Sequence[int], period: Sequence[int] = ()):
        self.pre = tuple(preperiod)
        self.per = tuple(period)
        validate_word(self.pre)
        validate_word(self.per)

    def digit(self, i: int):
        """1-based digit a_i, or None past the end of a finite word."""
        if i <= len(self.pre):
            return self.pre[i - 1]
        if not self.per:
            return None
        return self.per[(i - len(self.pre) - 1) % len(self.per)]

    def value(self):
        if self.per:
            return eval_periodic(self.pre, self.per)
        return word_value(self.pre)


def compare_digitwise(x: DigitStream, y: DigitStream) -> int:
    """Ordering of [0;x] vs [0;y] by the alternating digit rule.

    Returns -1, 0, +1.  Works for finite and eventually periodic streams; a
    finite word is treated as ending with an infinite digit (its value is the
    endpoint of its cylinder).
    """
    # agreement horizon: past preperiods plus one full common period the
    # streams are globally equal
    import math

    horizon = len(x.pre) + len(y.pre) + 2
    if x.per and y.per:
        horizon += 2 * math.lcm(len(x.per), len(y.per))
    else:
        horizon += len(x.per) + len(y.per) + max(len(x.pre), len(y.pre)) + 2

    for i in range(1, horizon + 1):
        a, b = x.digit(i), y.digit(i)
        if a == b:
            if a is None:
                return 0
            continue
        if a is None:
            # x ended: x = [0; w], y extends w; [0; w ...] > [0; w] iff |w| even
            return -1 if (i - 1) % 2 == 0 else 1
        if b is None:
            return 1 if (i - 1) % 2 == 0 else -1
        sign = 1 if i % 2 == 0 else -1  # (-1)^i with i the differing index
        return sign if a > b else -sign
    return 0


def approx(value: Value, precision: int = 6, digits: int = DEFAULT_DIGITS) -> Enclosure:
    """Enclosure of width < 10^-precision around an exact value.

    Sums of surds with distinct radicands are enclosed term by term, never
    collapsed through floating point.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    s = SurdSum.of(value)
    work = max(digits, precision + 8)
    enc = s.enclosure(work)
    while enc.width >= Fraction(1, 10 ** precision):
        work *= 2
        enc = s.enclosure(work)
    return enc


def periodic_in_cylinder(preperiod: Sequence[int], period: Sequence[int]) -> bool:
    """Check the defining sanity property: the value lies in its cylinder."""
    w = tuple(preperiod) + tuple(period)
    cyl = cylinder(w)
    v = eval_periodic(preperiod, period)
    lo, hi = cyl.left, cyl.right
    return (v - lo).sign() >= 0 and (hi - v).sign() >= 0
