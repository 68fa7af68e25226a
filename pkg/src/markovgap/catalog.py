"""Built-in shift specifications and gap-constant cases.

The digit-restricted Gauss-map sets used for dimension estimates, and the
pairs (B, C) of symmetric shifts whose gap constants guard the spectrum
windows, are data; new windows can be added here or via spec files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .sft import SftSpec
from .surd import Surd, SurdSum

# ---------------------------------------------------------------------------
# digit-restricted Gauss-map Cantor sets (dimension-estimate catalog)

GAUSS_SETS: Dict[str, SftSpec] = {
    "K12": SftSpec.full({1, 2}, name="K12"),
    "K123": SftSpec.full({1, 2, 3}, name="K123"),
    "K1234": SftSpec.full({1, 2, 3, 4}, name="K1234"),
    "X2_121_212": SftSpec.forbidding({1, 2}, [(1, 2, 1), (2, 1, 2)], name="X2_121_212"),
    "X3_13_31": SftSpec.forbidding({1, 2, 3}, [(1, 3), (3, 1)], name="X3_13_31"),
    "X3_131_313_231_132": SftSpec.forbidding(
        {1, 2, 3},
        [(1, 3, 1), (3, 1, 3), (2, 3, 1), (1, 3, 2)],
        name="X3_131_313_231_132",
    ),
    "X3_131_313_2312_2132": SftSpec.forbidding(
        {1, 2, 3},
        [(1, 3, 1), (3, 1, 3), (2, 3, 1, 2), (2, 1, 3, 2)],
        name="X3_131_313_2312_2132",
    ),
    "X4_14_41_24_42": SftSpec.forbidding(
        {1, 2, 3, 4},
        [(1, 4), (4, 1), (2, 4), (4, 2)],
        name="X4_14_41_24_42",
    ),
}


# ---------------------------------------------------------------------------
# symmetric block shifts for the gap constants

_B_4_1 = SftSpec.from_blocks([(1, 1), (2, 2)], name="B_4_1")

_B_4_3 = SftSpec.from_blocks(
    [(1,), (2,), (2, 3, 2, 1), (1, 2, 3, 2)],
    name="B_4_3",
)

# 31311 may only follow 3; 11313 may only be followed by 3 (mirror pair)
_B_4_4 = SftSpec.from_blocks(
    [(2, 1, 3, 1, 2), (2, 3, 2), (3,), (1, 1, 3, 1, 3), (3, 1, 3, 1, 1)],
    only_after={(3, 1, 3, 1, 1): [(3,)]},
    only_before={(1, 1, 3, 1, 3): [(3,)]},
    name="B_4_4",
)

# 33 is isolated from the letter 1 on both sides: it may not follow a block
# ending in 1 nor be followed by a block starting with 1
_B_5_3 = SftSpec.from_blocks(
    [(1,), (2,), (2, 3, 2, 1), (1, 2, 3, 2), (3, 3)],
    denied=[
        ((1,), (3, 3)),
        ((2, 3, 2, 1), (3, 3)),
        ((3, 3), (1,)),
        ((3, 3), (1, 2, 3, 2)),
    ],
    name="B_5_3",
)

# 3311 comes only after 211 or 2; 1133 is followed only by 112 or 2
# (plus the mirror rules, so the language stays reversal-closed)
_B_5_4 = SftSpec.from_blocks(
    [(1,), (2,), (2, 1, 1), (1, 1, 2), (2, 3, 2), (1, 1, 3, 3), (3, 3, 1, 1)],
    only_after={
        (3, 3, 1, 1): [(2, 1, 1), (2,)],
        (1, 1, 3, 3): [(2,), (1, 1, 2)],
    },
    only_before={
        (1, 1, 3, 3): [(1, 1, 2), (2,)],
        (3, 3, 1, 1): [(2,), (2, 1, 1)],
    },
    name="B_5_4",
)

_B_5_5 = SftSpec.from_blocks(
    [(1, 1), (2,), (2, 3, 2), (2, 1, 3, 3, 1, 2), (3, 3)],
    name="B_5_5",
)

_C_12 = SftSpec.full({1, 2}, name="C_12")
_C_123 = SftSpec.full({1, 2, 3}, name="C_123")
_C_X4 = GAUSS_SETS["X4_14_41_24_42"]


@dataclass(frozen=True)
class GapCase:
    """One guarded spectrum window: shifts B subset of C with target bound."""

    name: str
    B: SftSpec
    C: SftSpec
    bound: SurdSum          # the catalog target: certify c(B, C) < bound
    bound_text: str
    window: Tuple[str, str]  # spectrum interval the constant guards


def _sqrt(n: int) -> SurdSum:
    return SurdSum.of(Surd.sqrt_int(n))


def _dec(text: str) -> SurdSum:
    from fractions import Fraction

    return SurdSum.of(Fraction(text))


GAP_CASES: Dict[str, GapCase] = {
    case.name: case
    for case in [
        GapCase("4.1", _B_4_1, _C_12, _sqrt(10), "sqrt(10)", ("sqrt(10)", "sqrt(13)")),
        GapCase("4.2", _C_12, _C_123, _sqrt(13), "sqrt(13)", ("sqrt(13)", "3.84")),
        GapCase("4.3", _B_4_3, _C_123, _dec("3.81"), "3.81", ("3.84", "sqrt(20)")),
        GapCase("4.4", _B_4_4, _C_X4, _dec("4.46"), "4.46", ("sqrt(20)", "sqrt(21)")),
        GapCase("5.1", _B_4_1, _C_12, _dec("3.0407"), "3.0407", ("3.06", "sqrt(13)")),
        GapCase("5.3", _B_5_3, _C_123, _dec("3.84"), "3.84", ("3.84", "3.92")),
        GapCase("5.4", _B_5_4, _C_123, _dec("3.92"), "3.92", ("3.92", "4.01")),
        GapCase("5.5", _B_5_5, _C_123, _dec("4.01"), "4.01", ("4.01", "sqrt(20)")),
    ]
}

#: lower endpoints of the guarded windows, for the guard property check
GUARD_LOWER: Dict[str, SurdSum] = {
    "4.1": _sqrt(10),
    "4.2": _sqrt(13),
    "4.3": _dec("3.84"),
    "4.4": _sqrt(20),
    "5.1": _dec("3.06"),
    "5.3": _dec("3.84"),
    "5.4": _dec("3.92"),
    "5.5": _dec("4.01"),
}


def gauss_set(name: str) -> SftSpec:
    try:
        return GAUSS_SETS[name]
    except KeyError:
        raise KeyError(f"unknown catalog set {name!r}; known: {sorted(GAUSS_SETS)}")
