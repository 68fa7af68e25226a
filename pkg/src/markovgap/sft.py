"""Subshifts of finite type and sofic presentations.

An ``SftSpec`` describes a shift space over positive-integer letters in one
of two styles:

* letter style: an alphabet plus a finite set of forbidden words, compiled
  to the vertex shift on (k)-grams where k = max forbidden length - 1;
* block style: a finite set of generator blocks freely concatenated (all
  shifts included), optionally restricted by which block may follow which,
  compiled to the natural block-position automaton.

Both compile to the same ``Automaton``: a finite letter-labelled graph whose
bi-infinite paths spell exactly the shift.  One-sided tails may start at any
state (mid-block cuts included), matching the projection of the two-sided
shift.  All higher operations (transitivity, symmetry, extremal values,
orbit and cylinder enumeration) run on this presentation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .words import Word, contains, format_word, parse_word, reverse, validate_word


# ---------------------------------------------------------------------------
# automaton


class Automaton:
    """Letter-labelled directed graph; possibly nondeterministic."""

    def __init__(self, n_states: int, edges: Iterable[Tuple[int, int, int]], labels=None):
        self.n_states = n_states
        out: List[List[Tuple[int, int]]] = [[] for _ in range(n_states)]
        for src, letter, dst in edges:
            out[src].append((letter, dst))
        for lst in out:
            lst.sort()
        self.out = [tuple(lst) for lst in out]
        self.labels = tuple(labels) if labels is not None else tuple(range(n_states))

    @property
    def edges(self):
        for src, lst in enumerate(self.out):
            for letter, dst in lst:
                yield src, letter, dst

    @property
    def letters(self) -> FrozenSet[int]:
        return frozenset(letter for _, letter, _ in self.edges)

    def trimmed(self) -> "Automaton":
        """Restrict to states on bi-infinite paths (in/out degree >= 1)."""
        alive = set(range(self.n_states))
        changed = True
        while changed:
            changed = False
            indeg = {s: 0 for s in alive}
            outdeg = {s: 0 for s in alive}
            for src, _, dst in self.edges:
                if src in alive and dst in alive:
                    outdeg[src] += 1
                    indeg[dst] += 1
            for s in list(alive):
                if indeg[s] == 0 or outdeg[s] == 0:
                    alive.remove(s)
                    changed = True
        index = {s: i for i, s in enumerate(sorted(alive))}
        edges = [
            (index[a], letter, index[b])
            for a, letter, b in self.edges
            if a in index and b in index
        ]
        labels = [self.labels[s] for s in sorted(alive)]
        return Automaton(len(index), edges, labels)

    def reversed(self) -> "Automaton":
        return Automaton(
            self.n_states,
            [(dst, letter, src) for src, letter, dst in self.edges],
            self.labels,
        )

    def is_strongly_connected(self) -> bool:
        if self.n_states == 0:
            return False

        def reach(start: int, out) -> Set[int]:
            seen = {start}
            stack = [start]
            while stack:
                s = stack.pop()
                for _, t in out[s]:
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
            return seen

        fwd = reach(0, self.out)
        if len(fwd) != self.n_states:
            return False
        rev = self.reversed()
        return len(reach(0, rev.out)) == self.n_states

    def adjacency(self) -> List[List[int]]:
        mat = [[0] * self.n_states for _ in range(self.n_states)]
        for src, _, dst in self.edges:
            mat[src][dst] += 1
        return mat

    def trace_power(self, n: int) -> int:
        """trace(A^n) = number of closed paths of length n."""
        mat = self.adjacency()
        size = self.n_states

        def matmul(x, y):
            return [
                [sum(x[i][k] * y[k][j] for k in range(size)) for j in range(size)]
                for i in range(size)
            ]

        result = None
        base = mat
        m = n
        while m:
            if m & 1:
                result = base if result is None else matmul(result, base)
            base = matmul(base, base)
            m >>= 1
        assert result is not None
        return sum(result[i][i] for i in range(size))

    # -- language as a subset-construction DFA (all states initial) --

    def _det_step(self, subset: FrozenSet[int], letter: int) -> FrozenSet[int]:
        nxt = set()
        for s in subset:
            for lab, t in self.out[s]:
                if lab == letter:
                    nxt.add(t)
        return frozenset(nxt)

    def accepts_factor(self, w: Sequence[int]) -> bool:
        subset = frozenset(range(self.n_states))
        for a in w:
            subset = self._det_step(subset, a)
            if not subset:
                return False
        return True

    def factors(self, length: int) -> Set[Word]:
        """All admissible words of exactly this length."""
        results: Set[Word] = set()
        letters = sorted(self.letters)
        stack = [(frozenset(range(self.n_states)), ())]
        while stack:
            subset, w = stack.pop()
            if len(w) == length:
                results.add(w)
                continue
            for a in letters:
                nxt = self._det_step(subset, a)
                if nxt:
                    stack.append((nxt, w + (a,)))
        return results


def language_equal(a: Automaton, b: Automaton) -> bool:
    """Equality of factor languages, by synchronized subset construction."""
    letters = sorted(a.letters | b.letters)
    start = (frozenset(range(a.n_states)), frozenset(range(b.n_states)))
    seen = {start}
    stack = [start]
    while stack:
        sa, sb = stack.pop()
        for letter in letters:
            na = a._det_step(sa, letter)
            nb = b._det_step(sb, letter)
            if bool(na) != bool(nb):
                return False
            if not na:
                continue
            nxt = (na, nb)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return True


def language_subset(a: Automaton, b: Automaton) -> bool:
    """Is every factor of `a` a factor of `b`?"""
    letters = sorted(a.letters | b.letters)
    start = (frozenset(range(a.n_states)), frozenset(range(b.n_states)))
    seen = {start}
    stack = [start]
    while stack:
        sa, sb = stack.pop()
        for letter in letters:
            na = a._det_step(sa, letter)
            nb = b._det_step(sb, letter)
            if na and not nb:
                return False
            if not na:
                continue
            nxt = (na, nb)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return True


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class SftSpec:
    """Declarative description of a subshift; see module docstring."""

    alphabet: FrozenSet[int]
    forbidden: FrozenSet[Word] = frozenset()
    blocks: Optional[Tuple[Word, ...]] = None
    denied_pairs: FrozenSet[Tuple[Word, Word]] = frozenset()
    name: str = ""

    def __post_init__(self):
        for a in self.alphabet:
            if a < 1:
                raise ValueError("alphabet letters must be >= 1")
        for w in self.forbidden:
            validate_word(w, allow_empty=False)
            if any(a not in self.alphabet for a in w):
                raise ValueError(f"forbidden word {w} uses letters outside the alphabet")
        if self.blocks is not None:
            if self.forbidden:
                raise ValueError("give either blocks or forbidden words, not both")
            block_set = set(self.blocks)
            for w in self.blocks:
                validate_word(w, allow_empty=False)
                if any(a not in self.alphabet for a in w):
                    raise ValueError(f"block {w} uses letters outside the alphabet")
            for u, v in self.denied_pairs:
                if u not in block_set or v not in block_set:
                    raise ValueError(f"denied pair ({u}, {v}) names unknown blocks")
        elif self.denied_pairs:
            raise ValueError("denied pairs require a block presentation")

    # -- constructors --

    @staticmethod
    def full(alphabet: Iterable[int], name: str = "") -> "SftSpec":
        return SftSpec(frozenset(alphabet), name=name)

    @staticmethod
    def forbidding(alphabet: Iterable[int], words: Iterable[Sequence[int]], name: str = "") -> "SftSpec":
        return SftSpec(
            frozenset(alphabet),
            frozenset(tuple(w) for w in words),
            name=name,
        )

    @staticmethod
    def from_blocks(
        blocks: Iterable[Sequence[int]],
        denied: Iterable[Tuple[Sequence[int], Sequence[int]]] = (),
        only_after: Dict[Sequence[int], Iterable[Sequence[int]]] = None,
        only_before: Dict[Sequence[int], Iterable[Sequence[int]]] = None,
        name: str = "",
    ) -> "SftSpec":
        """Block shift; `denied` lists (u, v) meaning v may not follow u.

        `only_after[b] = S` allows b only after blocks in S; `only_before[b]`
        dually restricts what may follow b.  Both compile to denied pairs.
        """
        blocks = tuple(sorted(tuple(b) for b in blocks))
        alphabet = frozenset(a for b in blocks for a in b)
        pairs = {(tuple(u), tuple(v)) for u, v in denied}
        for b, allowed in (only_after or {}).items():
            allowed = {tuple(a) for a in allowed}
            pairs.update((u, tuple(b)) for u in blocks if u not in allowed)
        for b, allowed in (only_before or {}).items():
            allowed = {tuple(a) for a in allowed}
            pairs.update((tuple(b), v) for v in blocks if v not in allowed)
        return SftSpec(alphabet, blocks=blocks, denied_pairs=frozenset(pairs), name=name)

    # -- presentation --

    @property
    def memory(self) -> int:
        if self.blocks is not None:
            return max(len(b) for b in self.blocks)
        if not self.forbidden:
            return 0
        return max(len(w) for w in self.forbidden) - 1

    def automaton(self) -> Automaton:
        if self.blocks is not None:
            aut = self._block_automaton()
        else:
            aut = self._gram_automaton()
        return aut.trimmed()

    def _gram_automaton(self) -> Automaton:
        k = self.memory
        letters = sorted(self.alphabet)
        if k == 0:
            return Automaton(1, [(0, a, 0) for a in letters], labels=[()])
        grams = [
            g
            for g in itertools.product(letters, repeat=k)
            if not any(contains(g, f) for f in self.forbidden)
        ]
        index = {g: i for i, g in enumerate(grams)}
        edges = []
        for g in grams:
            for a in letters:
                window = g + (a,)
                if any(f == window[-len(f):] for f in self.forbidden if len(f) <= k + 1):
                    continue
                nxt = window[1:]
                if nxt in index:
                    edges.append((index[g], a, index[nxt]))
        return Automaton(len(grams), edges, labels=grams)

    def _block_automaton(self) -> Automaton:
        states = []
        for b in self.blocks:
            for i in range(len(b)):
                states.append((b, i))
        index = {s: i for i, s in enumerate(states)}
        edges = []
        for b in self.blocks:
            for i in range(len(b) - 1):
                edges.append((index[(b, i)], b[i], index[(b, i + 1)]))
            for b2 in self.blocks:
                if (b, b2) in self.denied_pairs:
                    continue
                edges.append((index[(b, len(b) - 1)], b[-1], index[(b2, 0)]))
        labels = [f"{format_word(b)}@{i}" for b, i in states]
        return Automaton(len(states), edges, labels)

    # -- checked properties --

    def is_nonempty(self) -> bool:
        return self.automaton().n_states > 0

    def is_transitive(self) -> bool:
        aut = self.automaton()
        return aut.n_states > 0 and aut.is_strongly_connected()

    def is_symmetric(self) -> bool:
        """Is the factor language closed under word reversal?"""
        aut = self.automaton()
        return language_equal(aut, aut.reversed())

    def contains_shift(self, other: "SftSpec") -> bool:
        """Is other's shift contained in this one (by factor language)?"""
        return language_subset(other.automaton(), self.automaton())

    def require_transitive(self) -> Automaton:
        aut = self.automaton()
        if aut.n_states == 0:
            raise ValueError(f"spec {self.describe()} defines an empty shift")
        if not aut.is_strongly_connected():
            raise ValueError(f"spec {self.describe()} is not transitive")
        return aut

    def describe(self) -> str:
        return self.name or serialize_spec(self).replace("\n", "; ")


# ---------------------------------------------------------------------------
# serialization (canonical text format, bit-exact round trip)


def serialize_spec(spec: SftSpec) -> str:
    lines = [f"alphabet: {' '.join(str(a) for a in sorted(spec.alphabet))}"]
    if spec.blocks is not None:
        lines.append("blocks: " + " ".join(format_word(b) for b in spec.blocks))
        if spec.denied_pairs:
            pairs = sorted(spec.denied_pairs)
            lines.append(
                "deny: " + " ".join(f"{format_word(u)}->{format_word(v)}" for u, v in pairs)
            )
    if spec.forbidden:
        lines.append("forbidden: " + " ".join(format_word(w) for w in sorted(spec.forbidden)))
    if spec.name:
        lines.append(f"name: {spec.name}")
    return "\n".join(lines) + "\n"


def parse_spec(text: str, source: str = "<string>") -> SftSpec:
    alphabet = None
    forbidden: Set[Word] = set()
    blocks = None
    denied: Set[Tuple[Word, Word]] = set()
    name = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'field: values', got {raw!r}")
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        try:
            if key == "alphabet":
                alphabet = frozenset(int(tok) for tok in rest.split())
            elif key == "forbidden":
                forbidden = {parse_word(tok) for tok in rest.split()}
            elif key == "blocks":
                blocks = tuple(sorted(parse_word(tok) for tok in rest.split()))
            elif key == "deny":
                for tok in rest.split():
                    u, _, v = tok.partition("->")
                    if not v:
                        raise ValueError(f"malformed deny pair {tok!r}")
                    denied.add((parse_word(u), parse_word(v)))
            elif key == "name":
                name = rest
            else:
                raise ValueError(f"unknown field {key!r}")
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: field {key!r}: {exc}") from exc
    if alphabet is None:
        raise ValueError(f"{source}: missing required field 'alphabet'")
    return SftSpec(
        alphabet,
        frozenset(forbidden),
        blocks,
        frozenset(denied),
        name,
    )


def load_spec(path) -> SftSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read(), source=str(path))
