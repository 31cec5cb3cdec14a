from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from braidcrs.sampling import corpus  # noqa: E402


@pytest.fixture(scope="session")
def regression_corpus():
    """500 braids with n ≤ 5 and canonical length ≤ 6, fixed seed."""
    return corpus(seed=20240611, size=500, max_n=5, max_length=6)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(seed=7, size=120, max_n=5, max_length=6)


# --- acceptance summary ------------------------------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(name)
        if prev != "FAIL":
            _acceptance[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for name, title in CRITERIA.items():
        status = _acceptance.get(name, "NOT RUN")
        terminalreporter.write_line(f"{status:7} {title}")
