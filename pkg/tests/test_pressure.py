import pytest

from markovgap.gauss import GaussSystem
from markovgap.pressure import RIGOROUS_LABEL, pressure_bracket
from markovgap.sft import SftSpec


def test_K12_depth10_brackets_dimension(gauss_systems):
    br = pressure_bracket(gauss_systems["K12"], 10)
    assert br.lower < 0.5313 < br.upper
    assert br.method == RIGOROUS_LABEL


def test_K123_depth8_brackets_dimension(gauss_systems):
    br = pressure_bracket(gauss_systems["K123"], 8)
    assert br.lower < 0.7057 < br.upper


def test_single_digit_collapses_to_zero():
    sys1 = GaussSystem(SftSpec.full({1}, name="K1"))
    br = pressure_bracket(sys1, 8)
    assert br.lower == 0.0
    assert br.upper < 0.01


def test_bracket_narrows_with_depth(gauss_systems):
    b6 = pressure_bracket(gauss_systems["K12"], 6)
    b10 = pressure_bracket(gauss_systems["K12"], 10)
    assert b10.upper - b10.lower < b6.upper - b6.lower


def test_depth_validation(gauss_systems):
    with pytest.raises(ValueError):
        pressure_bracket(gauss_systems["K12"], 2)


def test_every_catalog_estimate_inside_depth8_bracket(gauss_systems, jp_estimates):
    for name, sys_ in gauss_systems.items():
        br = pressure_bracket(sys_, 8)
        assert br.contains(jp_estimates[name].value), name
