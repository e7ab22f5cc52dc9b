import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quadrics.io import parse_degenerate_involution  # noqa: E402


@pytest.fixture
def P():
    return parse_degenerate_involution


SUITE_LIMIT = 300.0


def pytest_sessionstart(session):
    session.config._quadrics_t0 = time.perf_counter()


def _elapsed(config):
    return time.perf_counter() - config._quadrics_t0


def pytest_sessionfinish(session, exitstatus):
    if _elapsed(session.config) >= SUITE_LIMIT:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = _elapsed(config)
    status = "PASS" if elapsed < SUITE_LIMIT else "FAIL"
    terminalreporter.write_line(f"SUITE RUNTIME {status} whole suite in {elapsed:.1f}s (limit {SUITE_LIMIT:.0f}s)")
