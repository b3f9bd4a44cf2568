# One PASS/FAIL line per acceptance criterion, printed after the run.

ACCEPTANCE: dict[str, tuple[str, str]] = {}


def record(number: str, title: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = ("PASS" if ok else "FAIL", f"{title}: {detail}")
    print(f"criterion {number} {ACCEPTANCE[number][0]}  {ACCEPTANCE[number][1]}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")
