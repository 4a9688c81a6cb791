"""
Shared fixtures for the qweyl test suite
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebras.presentations import Family, PresentationId  # noqa: E402
from core.scalars import LambdaMode, ParamContext  # noqa: E402
from validators.sampling import get_rng  # noqa: E402

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))


@pytest.fixture
def rng():
    return get_rng(20240229)


@pytest.fixture
def ctx1():
    return ParamContext(1)


@pytest.fixture
def ctx2():
    return ParamContext(2)


@pytest.fixture
def ctx3():
    return ParamContext(3)


@pytest.fixture
def ones2():
    return ParamContext(2, LambdaMode.ALL_ONES)


@pytest.fixture
def aj_b2(ctx2):
    return PresentationId(Family.AJ, True, ctx2)


@pytest.fixture
def malt_b2(ctx2):
    return PresentationId(Family.MALTSINIOTIS, True, ctx2)


@pytest.fixture
def aj_a1(ctx1):
    return PresentationId(Family.AJ, False, ctx1)
