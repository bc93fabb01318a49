"""Shared pytest plumbing: a scoreboard that prints one PASS/FAIL line
per acceptance criterion at the end of the run."""

from __future__ import annotations

CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    """Remember the outcome of an acceptance criterion; if a criterion is
    recorded more than once, any failure sticks."""
    if number in CRITERIA and not CRITERIA[number][0]:
        return
    CRITERIA[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict} — {detail}")
