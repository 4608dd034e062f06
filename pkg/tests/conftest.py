import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_command(script: str, *args: str) -> str:
    return " ".join([sys.executable, str(FIXTURES / script), *args])


@pytest.fixture
def fixture_cmd():
    return fixture_command


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
