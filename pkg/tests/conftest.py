import pytest
from hypothesis import settings

from magnetomech.core import MagnetSphere, SCRing

# Fixed example generation so repeated runs exercise the same cases.
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def yig():
    return MagnetSphere(25e-6, 14.32e-3, 5110.0)


@pytest.fixture
def ring_magnet():
    return MagnetSphere(12e-6, 1.2, 7500.0)


@pytest.fixture
def al_ring():
    def make(R=183.4e-6, I=1e-6):
        return SCRing(R, 5e-6, 2700.0, I)

    return make
