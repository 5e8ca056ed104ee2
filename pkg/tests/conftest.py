import pytest

from sommerfeld import QuadratureSpec, reference_scenario


@pytest.fixture
def sea_30mhz():
    """Sea water, 30 MHz, dipole at 60 m, observer at 15 m, 1 km apart."""
    return reference_scenario(30e6, 1000.0)


@pytest.fixture
def tight():
    return QuadratureSpec(rel_tol=1e-6)


_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one acceptance line (shown in the terminal summary) and print it."""
    def _report(number, passed, message):
        line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {message}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return _report


@pytest.fixture
def note():
    def _note(number, message):
        line = f"criterion {number:>2}: info  {message}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return _note


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
