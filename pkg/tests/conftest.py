import pytest
from hypothesis import HealthCheck, settings

from latticeknots.constructions import catalog_entry, catalog_names

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SQUARE = [[(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]]
# the six-stick nonplanar unknot
SIX = [[(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]]


@pytest.fixture(scope="session")
def trefoil():
    return catalog_entry("3_1").conformation


@pytest.fixture(scope="session")
def figure8():
    return catalog_entry("4_1").conformation


@pytest.fixture(scope="session")
def all_catalog():
    return {name: catalog_entry(name).conformation for name in catalog_names()}


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
