import pytest

_RESULTS = []


@pytest.fixture
def criterion():
    """Record (label, ok, detail) for the acceptance summary, then assert ok."""

    def record(label, ok, detail=""):
        _RESULTS.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
