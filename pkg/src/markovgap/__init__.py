"""Exact continued-fraction machinery for spectrum-gap dimension bounds.

Subpackages cover: exact continuant/cylinder arithmetic, quadratic surds,
subshifts of finite type and their Cantor sets, covering certificates for
gap sets, periodic-orbit dimension estimates for Gauss-map Cantor sets, and
the piecewise assembly of the global bound.
"""

from .continuants import ContinuantMatrix, CylinderInterval, continuants, cylinder, word_value
from .cf import approx, compare_digitwise, compare_values, DigitStream, eval_periodic
from .enclosure import DEFAULT_DIGITS, Enclosure, pow_enclosure, sqrt_enclosure
from .surd import Surd, SurdSum
from .words import Word, parse_word, format_word, avoids

__version__ = "0.1.0"

__all__ = [
    "ContinuantMatrix",
    "CylinderInterval",
    "DigitStream",
    "DEFAULT_DIGITS",
    "Enclosure",
    "Surd",
    "SurdSum",
    "Word",
    "approx",
    "avoids",
    "compare_digitwise",
    "compare_values",
    "continuants",
    "cylinder",
    "eval_periodic",
    "format_word",
    "parse_word",
    "pow_enclosure",
    "sqrt_enclosure",
    "word_value",
]
