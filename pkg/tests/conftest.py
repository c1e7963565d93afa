"""Shared pytest hooks: the acceptance suite records one verdict line per criterion."""
import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    def record(number: int, title: str, failures: list[str], seconds: float) -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title} ({seconds:.2f}s)"
        if failures:
            line += f" -- {len(failures)} problem(s), first: {failures[0]}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert not failures, "\n".join(failures[:20])

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
