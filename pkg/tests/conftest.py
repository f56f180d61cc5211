import pytest

_LINES: list[str] = []


@pytest.fixture(scope="session")
def criterion_line():
    """Record a one-line verdict for an acceptance criterion."""

    def record(number, title, passed, detail=""):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        _LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
