"""Dimension estimates from periodic-orbit expansions of det(I - L_s).

The transfer operator of the Gauss map restricted to an admissible digit
system, with weight |T'|^{-s}, has trace over n-fold compositions

    t_n(s) = sum over fixed points x of T^n of lam^s / (1 - (-1)^n lam),

lam the inverse derivative at x: each inverse branch is a contraction whose
fixed-point derivative is (-1)^n lam.  The determinant expands as
det(I - L_s) = sum c_m with the Plemelj-Smithies recursion

    c_0 = 1,   c_m = -(1/m) * sum_{j=1..m} t_j c_{m-j},

and the truncation Delta_N(s) = sum_{m<=N} c_m has a zero converging
superexponentially to the Hausdorff dimension (Jenkinson & Pollicott 2001).
Estimates from this route are HEURISTIC: the truncation error is not
certified here, only tracked empirically via |est_N - est_{N-1}|.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional

from .gauss import MAX_ORDER, GaussSystem, WORKING_DIGITS, orbit_numerics

HEURISTIC = "HEURISTIC"


@dataclass(frozen=True)
class DimEstimate:
    set_name: str
    value: Fraction
    order: int
    residual: Fraction          # |estimate_N - estimate_{N-1}|
    method: str = HEURISTIC

    def __post_init__(self):
        if not (0 < self.value < 1):
            raise ValueError(f"dimension estimate {self.value} outside (0, 1)")

    def to_dict(self) -> dict:
        return {
            "set": self.set_name,
            "value": f"{float(self.value):.9f}",
            "order": self.order,
            "residual": f"{float(self.residual):.3e}",
            "method": self.method,
        }


class DeterminantEvaluator:
    """Reusable Delta_N(s) evaluator with cached orbit numerics."""

    def __init__(self, sys: GaussSystem, order: int, digits: int = WORKING_DIGITS):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}")
        self.sys = sys
        self.order = order
        self.data, self.ctx = orbit_numerics(sys, order, digits)

    def traces(self, s) -> List[Decimal]:
        ctx = self.ctx
        s_dec = Decimal(s.numerator) / Decimal(s.denominator) if isinstance(s, Fraction) else Decimal(s)
        t = [ctx.create_decimal(0) for _ in range(self.order + 1)]
        one = Decimal(1)
        for orb in self.data:
            u = ctx.exp(ctx.multiply(s_dec, orb.ln_lam))  # lam^s
            u_pow = one
            for k, lam_k in enumerate(orb.lam_powers, start=1):
                u_pow = ctx.multiply(u_pow, u)
                n = orb.period * k
                sign = -1 if n % 2 else 1
                denom = ctx.subtract(one, ctx.multiply(Decimal(sign), lam_k))
                contrib = ctx.divide(ctx.multiply(Decimal(orb.period), u_pow), denom)
                t[n] = ctx.add(t[n], contrib)
        return t

    def determinant(self, s, order: Optional[int] = None) -> Decimal:
        """Delta_order(s); order defaults to the evaluator's order."""
        N = self.order if order is None else order
        if N > self.order:
            raise ValueError(f"order {N} exceeds enumerated orbit data ({self.order})")
        ctx = self.ctx
        t = self.traces(s)
        c = [Decimal(1)]
        for m in range(1, N + 1):
            acc = ctx.create_decimal(0)
            for j in range(1, m + 1):
                acc = ctx.add(acc, ctx.multiply(t[j], c[m - j]))
            c.append(ctx.divide(-acc, Decimal(m)))
        total = ctx.create_decimal(0)
        for cm in c:
            total = ctx.add(total, cm)
        return total

    def root(self, order: Optional[int] = None, tol: Fraction = Fraction(1, 10 ** 13)) -> Fraction:
        """Bisection zero of s -> Delta(s), located from the top of (0, 1).

        Delta is positive for s above the dimension and crosses zero there;
        low-order truncations can oscillate spuriously at small s, so the
        bracket is the first sign change met scanning down from s = 0.99.
        Raises if no sign change exists on (0.01, 0.99).
        """
        N = self.order if order is None else order
        grid = [Fraction(99, 100) - Fraction(7, 100) * i for i in range(15)]
        bracket = None
        prev_s = grid[0]
        prev_f = self.determinant(prev_s, N)
        for s in grid[1:]:
            f = self.determinant(s, N)
            if prev_f > 0 and f <= 0:
                bracket = (s, prev_s, f)
                break
            prev_s, prev_f = s, f
        if bracket is None:
            raise ArithmeticError(
                f"no sign change of Delta_{N} on (0.01, 0.99) for {self.sys.name}"
            )
        lo, hi, f_lo = bracket
        if f_lo == 0:
            return lo
        while hi - lo > tol:
            mid = (lo + hi) / 2
            f_mid = self.determinant(mid, N)
            if f_mid == 0:
                return mid
            if f_mid <= 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2


def determinant(sys: GaussSystem, s, order: int) -> Decimal:
    """One-shot Delta_order(s)."""
    return DeterminantEvaluator(sys, order).determinant(s)


def estimate_dimension(
    sys: GaussSystem,
    order: Optional[int] = None,
    tol: Fraction = Fraction(1, 10 ** 13),
) -> DimEstimate:
    """Dimension estimate at the given expansion order, with residual."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    N = sys.default_order() if order is None else order
    ev = DeterminantEvaluator(sys, N)
    value = ev.root(N, tol)
    residual = abs(value - ev.root(N - 1, tol)) if N > 1 else Fraction(1)
    return DimEstimate(sys.name, value, N, residual)
