import sys
from pathlib import Path

import pytest

from polydensity import _backend

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []
FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(params=_backend.available())
def each_backend(request):
    """Run a test once per available kernel, restoring the default afterwards."""
    previous = _backend.use_backend(request.param)
    yield request.param
    _backend.use_backend(previous)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
