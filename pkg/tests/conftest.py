"""Shared fixtures: the four worked example sets in F2^4."""

import pytest
from hypothesis import settings

from balanced_sets.algebra.set_model import VectorSet

# Sweeps over 2^n vectors run longer than the default per-example deadline
settings.register_profile("balanced-sets", deadline=None)
settings.load_profile("balanced-sets")


@pytest.fixture
def s1() -> VectorSet:
    return VectorSet.from_strings(["1001", "1101", "1100", "1000"])


@pytest.fixture
def s2() -> VectorSet:
    return VectorSet.from_strings(["0001", "0111", "0101", "1000", "0110", "1001"])


@pytest.fixture
def s3() -> VectorSet:
    return VectorSet.from_strings(["0000", "1000", "0100", "0010"])


@pytest.fixture
def s4() -> VectorSet:
    return VectorSet.from_strings(
        ["0000", "0010", "0101", "0111", "1000", "1010", "0001", "0011"]
    )
