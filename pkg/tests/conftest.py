import numpy as np
import pytest
from hypothesis import settings

from cocircular._backend import available_backends

settings.register_profile("suite", max_examples=50, deadline=None)
settings.load_profile("suite")

_BACKENDS = available_backends()


@pytest.fixture(params=sorted(_BACKENDS))
def kernels(request):
    """Each available kernel backend module (compiled and pure python)."""
    return _BACKENDS[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
