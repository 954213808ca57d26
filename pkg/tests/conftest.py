"""
Shared fixtures
"""

import numpy as np
import pytest

from polybohr.models.polynomial import FreePolynomial, Truncation
from polybohr.services.sampling_service import mobius_polynomial


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def small_trunc() -> Truncation:
    """Two factors, alphabets (1, 2), degrees (3, 2)"""
    return Truncation(degrees=(3, 2), alphabet_sizes=(1, 2))


@pytest.fixture
def mobius():
    """Builder of the truncated Möbius map (a - z) / (1 - a z) in one variable"""
    def build(a: float, degree: int = 60) -> FreePolynomial:
        return mobius_polynomial(a, degree)
    return build


@pytest.fixture
def single_worker(mocker):
    """Force serial execution wherever settings.WORKERS is read"""
    from polybohr.core.config import settings
    mocker.patch.object(settings, "WORKERS", 1)
    return settings
