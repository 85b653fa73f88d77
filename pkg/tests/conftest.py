import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monoidfact import MonoidPresentation, block_monoid, build_monoid  # noqa: E402

S_GENERATORS = [11, 12, 13, 16, 17, 18, 21]


@pytest.fixture(scope="session")
def S():
    return build_monoid(MonoidPresentation.numerical(S_GENERATORS))


@pytest.fixture(scope="session")
def U():
    return build_monoid(MonoidPresentation.kernel([[1, 1, -1, -1]]))


@pytest.fixture(scope="session")
def two_three():
    return build_monoid(MonoidPresentation.numerical([2, 3]))


@pytest.fixture(scope="session")
def bz3():
    return block_monoid((3,))


_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        _acceptance_results.append((marker.args[0], item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    def key(row):
        crit = str(row[0])
        digits = "".join(c for c in crit if c.isdigit())
        return int(digits), crit

    for crit, name, ok in sorted(_acceptance_results, key=key):
        terminalreporter.write_line(f"criterion {str(crit):>3}: {'PASS' if ok else 'FAIL'}  {name}")
