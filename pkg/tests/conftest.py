import pytest

from liesuper.report import GridBounds, build_report


@pytest.fixture(scope="session")
def default_report():
    return build_report(GridBounds())


@pytest.fixture
def verdict(request):
    """Print one PASS/FAIL line and keep it for the terminal summary."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(number: int, ok: bool, text: str) -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
        print(line)
        lines.append((number, line))
        return ok

    return record


_LINES = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
