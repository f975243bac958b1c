import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def acceptance_line():
    """Record one summary line per acceptance criterion."""

    def record(key: str, ok: bool, detail: str) -> None:
        _ACCEPTANCE[key] = f"{key:<12} {'PASS' if ok else 'FAIL'}  {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[-1])):
        terminalreporter.write_line(_ACCEPTANCE[key])
