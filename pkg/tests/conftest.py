import pytest

_ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (ok, title, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, title, detail = _ACCEPTANCE[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
