import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from arrspec.examples import boolean, mustata_7, n4_demo  # noqa: E402
from arrspec.lattice import build  # noqa: E402

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def m7():
    return mustata_7()


@pytest.fixture(scope="session")
def m7_lat(m7):
    return build(m7)


@pytest.fixture(scope="session")
def n4():
    return n4_demo()


@pytest.fixture(scope="session")
def n4_lat(n4):
    return build(n4)


@pytest.fixture(scope="session")
def bool3():
    return boolean(3)
