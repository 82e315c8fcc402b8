import pytest
from hypothesis import HealthCheck, settings

import ddmr

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def rl_data():
    return ddmr.rl_circuit()
