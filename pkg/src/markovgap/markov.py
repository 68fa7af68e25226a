"""Heights and Markov values of periodic bi-infinite sequences.

The height at position j of a bi-infinite sequence b is
[b_j; b_{j+1}, ...] + [0; b_{j-1}, b_{j-2}, ...].  For a periodic sequence
both tails are purely periodic, so each height is an exact sum of two surds
plus an integer; the Markov value is the maximum over one period of shifts
(for a periodic orbit the limsup equals the sup, so the Lagrange value
coincides).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .cf import eval_periodic
from .surd import SurdSum
from .words import Word, validate_word


@dataclass(frozen=True)
class PeriodicSeq:
    """Bi-infinite repetition of a nonempty period word."""

    period: Word

    def __post_init__(self):
        validate_word(self.period, allow_empty=False)

    def digit(self, i: int) -> int:
        return self.period[i % len(self.period)]

    def rotation(self, i: int) -> Word:
        n = len(self.period)
        i %= n
        return self.period[i:] + self.period[:i]


def height(seq: PeriodicSeq, position: int = 0) -> SurdSum:
    """Exact height [b_j; future] + [0; past] at a shift position."""
    n = len(seq.period)
    j = position % n
    future_tail = eval_periodic((), seq.rotation(j + 1))
    # past digits (b_{j-1}, b_{j-2}, ...) repeat the reversal of rotation(j)
    past = eval_periodic((), tuple(reversed(seq.rotation(j))))
    return SurdSum.of(seq.digit(j), future_tail, past)


@dataclass(frozen=True)
class MarkovValue:
    value: SurdSum
    position: int
    heights: Tuple[SurdSum, ...]


def markov_value(seq) -> MarkovValue:
    """Markov value sup_j f(sigma^j b) of a periodic sequence.

    Accepts a PeriodicSeq or a plain period word.
    """
    if not isinstance(seq, PeriodicSeq):
        seq = PeriodicSeq(tuple(seq))
    heights = tuple(height(seq, j) for j in range(len(seq.period)))
    best = 0
    for j in range(1, len(heights)):
        if heights[j] > heights[best]:
            best = j
    return MarkovValue(heights[best], best, heights)
