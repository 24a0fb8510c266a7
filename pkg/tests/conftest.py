import pytest

# filled by tests/test_acceptance.py, printed once at the end of the run
CRITERIA: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip("abcd:"))):
        ok, detail = CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        CRITERIA[name] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    return record
