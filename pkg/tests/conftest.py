import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from inv4perm import get_field  # noqa: E402


@pytest.fixture(scope="session")
def f6():
    return get_field(6)


@pytest.fixture(scope="session")
def f8():
    return get_field(8)


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    results = getattr(acc, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: int(k.split()[0])):
        ok, note = results[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {note}")
