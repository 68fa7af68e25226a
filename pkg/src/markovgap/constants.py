"""Imported constants with provenance.

These values are inputs, not computed claims of this package: the dimension
bound below sqrt(10) and the three Cantor-set dimensions come from the
literature; the half-line fact empties the top piece.  Everything else in
the reports is computed here and cross-checked against certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, NamedTuple


class ImportedConstant(NamedTuple):
    value: Fraction
    source: str


#: rigorous Hausdorff-dimension bounds for the full-digit Cantor sets
HENSLEY_DIMS: Dict[str, ImportedConstant] = {
    "K12": ImportedConstant(
        Fraction("0.531291"),
        "Hensley, rigorous bound for the digit set {1,2} (J. Number Theory, 1996)",
    ),
    "K123": ImportedConstant(
        Fraction("0.705661"),
        "Hensley, rigorous bound for the digit set {1,2,3} (J. Number Theory, 1996)",
    ),
    "K1234": ImportedConstant(
        Fraction("0.788947"),
        "Hensley, rigorous bound for the digit set {1,2,3,4} (J. Number Theory, 1996)",
    ),
}

#: dimension of the spectrum below sqrt(10)
LOW_SPECTRUM_BOUND = ImportedConstant(
    Fraction("0.93"),
    "Cusick & Flahive, The Markov and Lagrange Spectra, Ch. 6, Theorem 1",
)

#: the half-line [sqrt(21), inf) lies in the Lagrange spectrum
HALF_LINE_SOURCE = "Freiman (1973) and Schecker (1977): [sqrt(21), oo) in L"

#: catalog targets for the determinant-based estimates (rounded-up bounds)
HEURISTIC_DIM_TARGETS: Dict[str, Fraction] = {
    "X2_121_212": Fraction("0.365"),
    "X3_13_31": Fraction("0.574"),
    "X3_131_313_231_132": Fraction("0.612"),
    "X3_131_313_2312_2132": Fraction("0.65"),
    "X4_14_41_24_42": Fraction("0.715"),
}
