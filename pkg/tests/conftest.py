"""Shared fixtures: the acceptance recorder and its summary section."""

from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion.

    Lines are printed immediately (visible on failure) and repeated in a
    terminal-summary section so passing criteria stay visible too.
    """

    def record(number: int, label: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        if detail and not ok:
            status += f" ({detail})"
        line = f"criterion {number} {label}: {status}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
