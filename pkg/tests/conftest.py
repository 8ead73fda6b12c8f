import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: dict[int, str] = {}


@contextmanager
def _criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        ACCEPTANCE_LINES[number] = (f"FAIL criterion {number}: {title} "
                                    f"[{time.perf_counter() - start:.2f}s] {msg}")
        print(ACCEPTANCE_LINES[number])
        raise
    ACCEPTANCE_LINES[number] = f"PASS criterion {number}: {title} [{time.perf_counter() - start:.2f}s]"
    print(ACCEPTANCE_LINES[number])


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
