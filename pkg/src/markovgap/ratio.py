"""Cylinder refinement ratios r -> (r+1)/((ar+b)(cr+d)) and their maxima.

Extending a cylinder I(a_1..a_n) by a word w multiplies its length by
(r+1)/((p_w r + q_w)((p_w + p'_w) r + (q_w + q'_w))) where r = q_{n-1}/q_n
of the prefix; the coefficients come from the extension's continuants, so
the formula is exact for every concrete prefix (equality of rationals).

The maximum over r in [0, 1] is certified exactly: the derivative numerator
is quadratic with interior root r* = -1 + sqrt((a-b)(c-d)/(ac)), so the
candidates are the endpoints and (when 1 < (a-b)(c-d)/(ac) < 4) the enclosed
interior point; evaluating the function on an interval around r* bounds the
maximum from both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .continuants import continuants, cylinder_length
from .enclosure import DEFAULT_DIGITS, Enclosure, sqrt_enclosure
from .words import Word, validate_word


@dataclass(frozen=True)
class RatioFn:
    """(r+1)/((alpha*r+beta)(gamma*r+delta)) attached to an extension word."""

    extension: Word
    alpha: int
    beta: int
    gamma: int
    delta: int

    def __call__(self, r) -> Fraction:
        r = Fraction(r)
        return (r + 1) / ((self.alpha * r + self.beta) * (self.gamma * r + self.delta))

    def upper_on(self, lo: Fraction, hi: Fraction) -> Fraction:
        """Upper bound of the function on [lo, hi] by factor monotonicity."""
        return (hi + 1) / ((self.alpha * lo + self.beta) * (self.gamma * lo + self.delta))

    def __str__(self) -> str:
        return (
            f"(r+1)/(({self.alpha}r+{self.beta})({self.gamma}r+{self.delta}))"
        )


def ratio_fn(extension: Sequence[int]) -> RatioFn:
    """Length ratio |I(a.w)| / |I(a)| as a function of r = q_{n-1}/q_n."""
    w = tuple(extension)
    validate_word(w, allow_empty=False)
    m = continuants(w)
    return RatioFn(w, m.p, m.q, m.p + m.p_prev, m.q + m.q_prev)


def ratio_exact_check(f: RatioFn, prefix: Sequence[int]) -> bool:
    """Exactness at r = q_{n-1}/q_n of a concrete prefix (rational equality)."""
    m = continuants(tuple(prefix))
    r = Fraction(m.q_prev, m.q)
    lhs = cylinder_length(tuple(prefix) + f.extension) / cylinder_length(tuple(prefix))
    return lhs == f(r)


@dataclass(frozen=True)
class RatioMax:
    """Certified maximum of a RatioFn over r in [0, 1]."""

    fn: RatioFn
    enclosure: Enclosure      # contains the true maximum
    exact: Optional[Fraction]  # set when attained at a rational endpoint
    attained_at: str          # "r=0" | "r=1" | "interior"

    @property
    def upper(self) -> Fraction:
        return self.enclosure.hi


def max_ratio(f: RatioFn, digits: int = DEFAULT_DIGITS) -> RatioMax:
    """Certified maximum of f over [0, 1], tight to well below 1e-6 relative."""
    f0 = f(0)
    f1 = f(1)
    # critical equation: r^2 + 2r + K = 0, K = (ad+bc-bd)/(ac);
    # interior root r* = -1 + sqrt(E), E = (a-b)(c-d)/(ac)
    E = Fraction((f.alpha - f.beta) * (f.gamma - f.delta), f.alpha * f.gamma)
    best_exact, attained = (f0, "r=0") if f0 >= f1 else (f1, "r=1")
    if not (1 < E < 4):
        return RatioMax(f, Enclosure.exact(best_exact), best_exact, attained)

    root = sqrt_enclosure(E, digits)
    r_lo, r_hi = root.lo - 1, root.hi - 1
    if r_hi <= 0 or r_lo >= 1:
        return RatioMax(f, Enclosure.exact(best_exact), best_exact, attained)
    r_lo = max(r_lo, Fraction(0))
    r_hi = min(r_hi, Fraction(1))
    interior_hi = f.upper_on(r_lo, r_hi)
    interior_lo = f(root.lo - 1) if 0 < root.lo - 1 < 1 else best_exact
    if interior_hi <= best_exact:
        return RatioMax(f, Enclosure.exact(best_exact), best_exact, attained)
    return RatioMax(
        f,
        Enclosure(max(best_exact, interior_lo), interior_hi),
        None,
        "interior",
    )


def subdivision_upper_bound(f: RatioFn, grid_bits: int = 20) -> float:
    """Independent grid bound on max f over [0,1]; guards the exact path.

    Uses the same per-interval monotone envelope as `upper_on` on a uniform
    grid of 2**grid_bits cells, vectorized in float64.  Not a certificate;
    a transcription error in the coefficients would show up as a mismatch
    with the exact maximum well above float noise.
    """
    import numpy as np

    n = 1 << grid_bits
    lo = np.arange(n, dtype=np.float64) / n
    hi = lo + 1.0 / n
    vals = (hi + 1.0) / ((f.alpha * lo + f.beta) * (f.gamma * lo + f.delta))
    return float(vals.max())
