"""Shared fixtures; expensive orbit data is computed once per session."""

from __future__ import annotations

import pytest

from markovgap.catalog import GAUSS_SETS
from markovgap.gauss import GaussSystem
from markovgap.jp import estimate_dimension


@pytest.fixture(scope="session")
def gauss_systems():
    return {name: GaussSystem(spec) for name, spec in GAUSS_SETS.items()}


@pytest.fixture(scope="session")
def jp_estimates(gauss_systems):
    """Default-order dimension estimates for every catalog set."""
    return {name: estimate_dimension(sys_) for name, sys_ in gauss_systems.items()}
