import os

import pytest
from hypothesis import HealthCheck, settings

from qforms.fields import parse_field

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def F3():
    return parse_field("F3")


@pytest.fixture
def F5():
    return parse_field("F5")


@pytest.fixture
def F3x():
    return parse_field("F3((x))")


@pytest.fixture
def Q():
    return parse_field("Q")


@pytest.fixture
def R():
    return parse_field("R")


def pytest_terminal_summary(terminalreporter):
    try:
        from tests.test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        status, title, elapsed = RESULTS[n]
        terminalreporter.write_line(f"{status} criterion {n:2d} ({elapsed:6.2f}s): {title}")
