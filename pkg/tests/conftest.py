import os
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from ncalgebra import NcAlgebra, build_coxeter

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def datum(family: str, rank: int):
    return build_coxeter(family, rank)


@lru_cache(maxsize=None)
def algebra(family: str, rank: int) -> NcAlgebra:
    return NcAlgebra(datum(family, rank))


@pytest.fixture
def sym3():
    return algebra("A", 2)


@pytest.fixture
def sym4():
    return algebra("A", 3)


def label_index(d, label: str) -> int:
    """0-based Steinberg index of the reflection printed as ``label``."""
    for i in range(d.nrefl):
        if d.refl_label(i) == label:
            return i
    raise KeyError(label)
