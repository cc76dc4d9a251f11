import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Context manager that times a criterion and records one PASS/FAIL line."""
    lines = request.config.stash.setdefault(_LINES, {})

    @contextmanager
    def run(number, title, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s)"
            lines[number] = line
            print(line)

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
