import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])


@pytest.fixture(scope="session")
def so13():
    from dualpolar.catalog import real_form

    return real_form("so", 1, 3)


@pytest.fixture(scope="session")
def su12():
    from dualpolar.catalog import real_form

    return real_form("su", 1, 2)


@pytest.fixture(scope="session")
def sl2():
    from dualpolar.catalog import real_form

    return real_form("sl", 2)
