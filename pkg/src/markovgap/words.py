"""Finite words of positive partial quotients.

A word is a plain tuple of ints >= 1.  Periodic sequences are represented by
their period word and interpreted as bi-infinite repetition.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Word = Tuple[int, ...]


def word(digits: Iterable[int]) -> Word:
    w = tuple(int(a) for a in digits)
    validate_word(w)
    return w


def validate_word(w: Sequence[int], allow_empty: bool = True) -> None:
    if not allow_empty and len(w) == 0:
        raise ValueError("empty word not allowed here")
    for a in w:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"partial quotients must be integers >= 1, got {a!r}")


def parse_word(text: str) -> Word:
    """Parse '212' or '2,1,2' into (2, 1, 2)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"malformed word {text!r}") from exc
    validate_word(w)
    return w


def format_word(w: Word) -> str:
    """Inverse of parse_word; compact digits when unambiguous."""
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def contains(haystack: Sequence[int], needle: Sequence[int]) -> bool:
    n, m = len(haystack), len(needle)
    if m == 0 or m > n:
        return m == 0
    needle = tuple(needle)
    return any(tuple(haystack[i : i + m]) == needle for i in range(n - m + 1))


def cyclic_contains(period: Sequence[int], needle: Sequence[int]) -> bool:
    """Does the bi-infinite repetition of `period` contain `needle`?"""
    n, m = len(period), len(needle)
    if n == 0:
        raise ValueError("empty period")
    if m == 0:
        return True
    # Every length-m window of the repetition appears within this unrolling.
    reps = (n + m - 1 + n - 1) // n + 1
    return contains(tuple(period) * reps, needle)


def avoids(w: Sequence[int], forbidden: Iterable[Sequence[int]], cyclic: bool = False) -> bool:
    """True iff no forbidden word occurs in w (cyclically for periodic input)."""
    check = cyclic_contains if cyclic else contains
    return not any(check(w, tuple(f)) for f in forbidden)


def rotations(w: Word):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def min_rotation(w: Word) -> Word:
    return min(rotations(w))


def is_primitive(w: Word) -> bool:
    """True iff w is not a proper power of a shorter word."""
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w == w[:d] * (n // d):
            return False
    return True


def reverse(w: Word) -> Word:
    return tuple(reversed(w))
