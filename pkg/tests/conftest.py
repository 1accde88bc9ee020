import random
import sys

import pytest


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, _, line in sorted(results, key=lambda r: int(r[0])):
        terminalreporter.write_line(line)
