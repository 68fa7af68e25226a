"""Digit-restricted Gauss-map systems and their periodic orbits.

A system is a letter subshift (full or forbidden-word) together with the
Gauss map T(x) = 1/x - floor(1/x) acting on the Cantor set of [0; g] with g
admissible.  Periodic orbits of period n correspond to cyclically admissible
words up to rotation; the orbit through x = [0; w repeated] has multiplier

    lam = |(T^n)'(x)|^{-1} = prod x_i^2 = (q_{n-1} x + q_n)^{-2}

with q's the continuants of w, an exact quadratic surd in (0, 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN
from typing import Dict, List, Tuple

from .cf import eval_periodic
from .continuants import continuants
from .sft import Automaton, SftSpec
from .surd import Surd
from .words import Word, avoids, is_primitive, min_rotation

#: practical ceiling on the expansion order (orbit counts grow as |A|^n / n)
MAX_ORDER = 12

#: working precision (decimal digits) for multipliers, traces, determinants
WORKING_DIGITS = 60


@dataclass(frozen=True)
class PeriodicOrbitDatum:
    """One primitive periodic orbit: lex-minimal rotation and multiplier."""

    cyclic_word: Word
    multiplier: Surd          # exact; strictly inside (0, 1)
    fixed_point: Surd         # [0; cyclic_word repeated]

    def multiplier_product_form(self) -> Surd:
        """prod over the orbit of x_i^2, computed point by point."""
        out = Surd.from_rational(1)
        w = self.cyclic_word
        for i in range(len(w)):
            x_i = eval_periodic((), w[i:] + w[:i])
            out = out * x_i * x_i
        return out


class GaussSystem:
    """Orbit enumeration and caching for one catalog (or user) system."""

    def __init__(self, spec: SftSpec):
        if spec.blocks is not None:
            raise NotImplementedError(
                "Gauss systems take letter-style specs (alphabet + forbidden words)"
            )
        self.spec = spec
        self.automaton: Automaton = spec.require_transitive()
        self.name = spec.name or "anonymous"
        self._words: Dict[int, Tuple[Word, ...]] = {}
        self._orbits: Dict[int, Tuple[PeriodicOrbitDatum, ...]] = {}

    @property
    def memory(self) -> int:
        return self.spec.memory

    def default_order(self) -> int:
        """Expansion order keeping desk-scale runtime: 8, or 6 on 4 letters."""
        return 6 if len(self.spec.alphabet) >= 4 else 8

    def cyclically_admissible(self, w: Word) -> bool:
        return avoids(w, self.spec.forbidden, cyclic=True)

    def orbit_words(self, n: int) -> Tuple[Word, ...]:
        """Lex-minimal representatives of primitive period-n cyclic words."""
        if n < 1:
            raise ValueError("period must be >= 1")
        if n > MAX_ORDER:
            raise ValueError(f"period {n} beyond the practical ceiling {MAX_ORDER}")
        if n not in self._words:
            letters = sorted(self.spec.alphabet)
            found: List[Word] = []
            for w in itertools.product(letters, repeat=n):
                if w[0] != min(w):
                    continue  # a rotation starting lower exists
                if w != min_rotation(w) or not is_primitive(w):
                    continue
                if not self.cyclically_admissible(w):
                    continue
                found.append(w)
            self._words[n] = tuple(found)
        return self._words[n]

    def orbits(self, n: int) -> Tuple[PeriodicOrbitDatum, ...]:
        """All primitive period-n orbits with their exact multipliers."""
        if n not in self._orbits:
            self._orbits[n] = tuple(self._orbit_datum(w) for w in self.orbit_words(n))
        return self._orbits[n]

    def _orbit_datum(self, w: Word) -> PeriodicOrbitDatum:
        x = eval_periodic((), w)
        m = continuants(w)
        denom = x * m.q_prev + m.q
        lam = (denom * denom).reciprocal()
        assert lam.sign() > 0 and (1 - lam).sign() > 0
        return PeriodicOrbitDatum(w, lam, x)

    def orbit_count_identity(self, n: int) -> Tuple[int, int]:
        """(sum_{d|n} d * #orbits(d), trace(A^n)) -- they must agree."""
        total = 0
        for d in range(1, n + 1):
            if n % d == 0:
                total += d * len(self.orbit_words(d))
        return total, self.automaton.trace_power(n)


@dataclass(frozen=True)
class OrbitNumerics:
    """Decimal views of one orbit's multiplier at working precision."""

    period: int
    ln_lam: Decimal
    lam_powers: Tuple[Decimal, ...]  # lam^1 .. lam^(N // period)


def orbit_numerics(sys: GaussSystem, order: int, digits: int = WORKING_DIGITS):
    """Precompute per-orbit Decimal data for determinant evaluations."""
    ctx = Context(prec=digits + 10, rounding=ROUND_HALF_EVEN)
    data: List[OrbitNumerics] = []
    for d in range(1, order + 1):
        for orb in sys.orbits(d):
            enc = orb.multiplier.enclosure(digits + 10)
            lam = ctx.divide(
                Decimal(enc.mid.numerator), Decimal(enc.mid.denominator)
            )
            powers = [lam]
            for _ in range(order // d - 1):
                powers.append(ctx.multiply(powers[-1], lam))
            data.append(OrbitNumerics(d, ctx.ln(lam), tuple(powers)))
    return data, ctx
