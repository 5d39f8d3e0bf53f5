import pytest
from hypothesis import HealthCheck, settings

from gyrolab import build_gyro, catalog_group

settings.register_profile(
    "workbench",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("workbench")


@pytest.fixture(scope="session")
def d16():
    return catalog_group("dihedral:16")


@pytest.fixture(scope="session")
def d16_loop(d16):
    return build_gyro(d16).loop


@pytest.fixture(scope="session")
def heis3_loop():
    return build_gyro(catalog_group("heisenberg:3")).loop
