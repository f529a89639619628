import time

import pytest

_LINES_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the line is printed and repeated in the summary."""
    lines = request.config.stash.setdefault(_LINES_KEY, [])
    start = time.perf_counter()

    def record(number, title, ok, detail=""):
        elapsed = time.perf_counter() - start
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({elapsed:.2f}s)"
        if detail:
            line += f" -- {detail}"
        lines.append((line, elapsed))
        print(line)
        assert ok, line
        return elapsed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line, _ in lines:
        terminalreporter.write_line(line)
    total = sum(t for _, t in lines)
    terminalreporter.write_line(f"total acceptance time {total:.2f}s")
