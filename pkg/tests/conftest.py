import pytest

ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(label, passed, detail=""):
        ACCEPTANCE.append((label, bool(passed), detail))
        assert passed, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE:
        line = f"{'PASS' if passed else 'FAIL'}  {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
