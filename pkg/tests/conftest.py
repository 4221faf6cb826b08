import os

import pytest
from hypothesis import HealthCheck, settings

from rrcodes.field import make_field

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def F11():
    return make_field(11)


@pytest.fixture(scope="session")
def F19():
    return make_field(19)


@pytest.fixture(scope="session")
def F49():
    return make_field(7, 2)
