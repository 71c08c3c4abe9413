import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fockspace import FockConfig  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def configs():
    """One FockConfig per (type, ell), shared so the memo tables are reused."""
    cache = {}

    def get(t, ell):
        if (t, ell) not in cache:
            cache[t, ell] = FockConfig(t, ell)
        return cache[t, ell]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
