"""Bounded-distortion pressure bracketing of Cantor-set dimensions.

Cylinder lengths of continued-fraction sets multiply under concatenation up
to a factor of 2 each way:  |I(u)||I(v)|/2 <= |I(uv)| <= 2 |I(u)||I(v)|.
Covering the set by all admissible depth-kn cylinders therefore gives

    HD <= root of   sum over admissible |w|=n of (2 |I(w)|)^s = 1,

and distributing mass proportionally to (|I|/2)^s down the cylinder tree
gives, for every memory state t (the k-gram constraining continuations),

    HD >= largest s with  min over t of sum over w after t of (|I(w)|/2)^s >= 1.

Both sums use the exact rational cylinder lengths; only the root location is
floating point, padded outward.  The bracket is labelled
RIGOROUS-UP-TO-DISTORTION-CONSTANT and is the independent oracle validating
every determinant-based estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .gauss import GaussSystem

RIGOROUS_LABEL = "RIGOROUS-UP-TO-DISTORTION-CONSTANT"

#: outward padding absorbing float rounding in sums and root location
_PAD = 1e-6


@dataclass(frozen=True)
class PressureBracket:
    set_name: str
    depth: int
    lower: float
    upper: float
    method: str = RIGOROUS_LABEL

    def contains(self, s) -> bool:
        return self.lower <= float(s) <= self.upper

    def to_dict(self) -> dict:
        return {
            "set": self.set_name,
            "depth": self.depth,
            "lower": f"{self.lower:.6f}",
            "upper": f"{self.upper:.6f}",
            "method": self.method,
        }


def _census_fresh(sys: GaussSystem, depth: int, context: Tuple[int, ...]):
    """Counter of q*(q+q_prev) over admissible depth-n continuations.

    `context` is the admissible word already read (it only constrains
    admissibility through the memory window); the continuants are started
    fresh so the census holds the exact cylinder lengths 1/(q(q+q_prev))
    of the continuation words themselves.
    """
    letters = sorted(sys.spec.alphabet)
    forb = sys.spec.forbidden
    max_f = max((len(f) for f in forb), default=1)
    census: Dict[int, int] = {}

    def rec(window, q_prev, q, remaining):
        if remaining == 0:
            m = q * (q + q_prev)
            census[m] = census.get(m, 0) + 1
            return
        for a in letters:
            new_window = (window + (a,))[-max_f:]
            if any(f == new_window[-len(f):] for f in forb if len(f) <= len(new_window)):
                continue
            rec(new_window, q, a * q + q_prev, remaining - 1)

    window0 = tuple(context)[-max_f:] if context else ()
    rec(window0, 0, 1, depth)
    return census


def _sum_pow(census: Dict[int, int], s: float, scale: float) -> float:
    """sum count * (scale / m)^s over the census."""
    total = 0.0
    for m, count in census.items():
        total += count * math.exp(s * (math.log(scale) - math.log(m)))
    return total


def _falling_root(f, lo: float, hi: float, tol: float = 1e-9) -> float:
    """Root of a strictly decreasing f with f(lo) >= 0 >= f(hi)."""
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def pressure_bracket(sys: GaussSystem, depth: int) -> PressureBracket:
    """Dimension bracket [s_-, s_+] from depth-n cylinder sums."""
    if depth < 3:
        raise ValueError("depth must be >= 3")

    # upper: all admissible words, lengths doubled
    full = _census_fresh(sys, depth, ())
    f_up = lambda s: _sum_pow(full, s, 2.0) - 1.0
    if f_up(2.0) > 0:
        raise ArithmeticError("cylinder sums do not drop below 1 by s = 2")
    upper = _falling_root(f_up, 0.0, 2.0) if f_up(0.0) > 0 else 0.0

    # lower: worst memory state over continuation sums, lengths halved
    k = sys.memory
    if k == 0:
        contexts: List[Tuple[int, ...]] = [()]
    else:
        contexts = [tuple(g) for g in sys.automaton.labels]
    best_floor = None
    for ctx in contexts:
        census = _census_fresh(sys, depth, ctx)
        f_low = lambda s: _sum_pow(census, s, 0.5) - 1.0
        root = _falling_root(f_low, 0.0, 2.0) if f_low(0.0) > 0 else 0.0
        if best_floor is None or root < best_floor:
            best_floor = root
    lower = max(0.0, best_floor - _PAD)
    upper = upper + _PAD
    return PressureBracket(sys.name, depth, lower, upper)
