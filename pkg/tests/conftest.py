import json
from pathlib import Path

import pytest

from critline.zeros import default_scanner

DATA = Path(__file__).parent / "data"
_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def oracle():
    return json.loads((DATA / "oracle.json").read_text())


@pytest.fixture(scope="session")
def scanner():
    sc = default_scanner()
    sc.ensure_count(300)
    return sc


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
