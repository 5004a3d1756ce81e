import pytest

from twobridge.conway import ConwayForm
from twobridge.harness.enumeration import EnumerationSpec, enumerate_forms


def C(*entries):
    return ConwayForm.from_entries(entries)


@pytest.fixture(scope="session")
def corpus12():
    return list(enumerate_forms(EnumerationSpec(12)))


@pytest.fixture(scope="session")
def corpus13():
    return list(enumerate_forms(EnumerationSpec(13)))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
