"""Extremal values of subshift Cantor sets and the gap constant c(B, C).

K(A) = {[0; g] : g a one-sided admissible sequence} for a shift presentation
A.  The extremum of [0; g] over admissible continuations is found greedily:
the comparison lemma orders cylinders alternately in the digit, so at odd
depth the maximum takes the smallest available digit and the minimum the
largest (and conversely at even depth).  Running the greedy rule over sets
of presentation states makes the choice depend only on (state set, parity),
so it is eventually periodic by pigeonhole and the witness is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Sequence, Set, Tuple

from .cf import eval_periodic
from .enclosure import DEFAULT_DIGITS, Enclosure
from .sft import Automaton, SftSpec
from .surd import Surd, SurdSum
from .words import Word

_MAX_GREEDY_STEPS = 100_000


@dataclass(frozen=True)
class ExtremalResult:
    """Exact extremum of {[0; g]} with its eventually periodic witness."""

    value: Surd
    preperiod: Word
    period: Word

    @property
    def witness(self) -> Tuple[Word, Word]:
        return (self.preperiod, self.period)


def _feed_prefix(aut: Automaton, states: FrozenSet[int], prefix: Sequence[int]) -> FrozenSet[int]:
    for a in prefix:
        states = aut._det_step(states, a)
        if not states:
            raise ValueError(f"prefix {tuple(prefix)} is not admissible")
    return states


def extremal_value(
    source,
    which: str,
    prefix: Sequence[int] = (),
    side: str = "future",
) -> ExtremalResult:
    """Exact min or max of {[0; g] : g admissible, extending `prefix`}.

    `source` is an SftSpec or a compiled Automaton; `side="past"` uses the
    reversed presentation (the set K^-). Ties between digits cannot occur
    since digits are distinct integers.
    """
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    aut = source.automaton() if isinstance(source, SftSpec) else source
    if side == "past":
        aut = aut.reversed()
    elif side != "future":
        raise ValueError("side must be 'future' or 'past'")
    if aut.n_states == 0:
        raise ValueError("empty shift has no extremal values")

    prefix = tuple(prefix)
    states = _feed_prefix(aut, frozenset(range(aut.n_states)), prefix)

    digits: list = []
    seen: Dict[Tuple[FrozenSet[int], int], int] = {}
    while True:
        position = len(prefix) + len(digits) + 1  # 1-based index of next digit
        key = (states, position % 2)
        if key in seen:
            start = seen[key]
            pre = prefix + tuple(digits[:start])
            per = tuple(digits[start:])
            return ExtremalResult(eval_periodic(pre, per), pre, per)
        seen[key] = len(digits)

        choices = sorted({letter for s in states for letter, _ in aut.out[s]})
        if not choices:
            raise ValueError("admissible set is empty (dead state)")
        odd = position % 2 == 1
        if which == "max":
            digit = min(choices) if odd else max(choices)
        else:
            digit = max(choices) if odd else min(choices)
        digits.append(digit)
        states = aut._det_step(states, digit)
        if len(digits) > _MAX_GREEDY_STEPS:
            raise RuntimeError("greedy search failed to cycle; presentation too large")


def first_digits(aut: Automaton) -> Set[int]:
    """Letters that can start an admissible tail (= all edge labels)."""
    return set(aut.letters)


@dataclass(frozen=True)
class GapTerm:
    """One letter branch of the gap-constant maximization."""

    letter: int
    beta_min: ExtremalResult   # min of K(B) among values starting with `letter`
    value: SurdSum             # 1/beta_min + 1/(letter + min K(C))


@dataclass(frozen=True)
class GapConstant:
    value: SurdSum
    best: GapTerm
    terms: Tuple[GapTerm, ...]
    min_KC: ExtremalResult

    def enclosure(self, digits: int = DEFAULT_DIGITS) -> Enclosure:
        return self.value.enclosure(digits)


def gap_constant(B: SftSpec, C: SftSpec, check: bool = True) -> GapConstant:
    """The junction constant c(B, C) for symmetric shifts B inside C.

    For each letter n that can start a K(B) tail, a junction position whose
    future stays in B and whose past exits to C immediately after n yields
    the height 1/min(K(B) n (1/(n+1), 1/n)) + 1/(n + min K(C)); c(B, C) is
    the maximum over n.  Within-B positions and deeper exits are dominated
    by the same expression, since B-tail values are K(C) values.
    """
    aut_B = B.require_transitive()
    aut_C = C.require_transitive()
    if check:
        if not C.contains_shift(B):
            raise ValueError(f"{B.describe()} is not a subshift of {C.describe()}")
        if not B.is_symmetric():
            raise ValueError(f"{B.describe()} is not symmetric")
        if not C.is_symmetric():
            raise ValueError(f"{C.describe()} is not symmetric")

    min_KC = extremal_value(aut_C, "min")
    terms = []
    for n in sorted(first_digits(aut_B)):
        beta = extremal_value(aut_B, "min", prefix=(n,))
        total = SurdSum.of(beta.value.reciprocal()) + SurdSum.of(
            (min_KC.value + n).reciprocal()
        )
        terms.append(GapTerm(n, beta, total))
    best = max(terms, key=lambda t: t.value)  # SurdSum ordering is exact
    return GapConstant(best.value, best, tuple(terms), min_KC)
