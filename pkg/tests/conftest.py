from __future__ import annotations

import pytest

from hyperscope import load_fixture


@pytest.fixture(scope="session")
def bicycle():
    return load_fixture("E1")


@pytest.fixture(scope="session")
def emergency():
    return load_fixture("E2")


@pytest.fixture(scope="session")
def ecology():
    return load_fixture("E3")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" in nodeid and getattr(rep, "when", "call") == "call":
                name = nodeid.split("::", 1)[1]
                results[name] = "PASS" if status == "passed" else "FAIL"
    if not results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name in sorted(results):
        terminalreporter.write_line(f"  {results[name]}  {name}")
