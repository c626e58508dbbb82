"""Shared pytest wiring.

After a run that touched the acceptance suite, print one PASS/FAIL line per
criterion so the verdict is readable without scrolling through the full log.
"""

import re

CRITERION = re.compile(r"test_c(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    verdicts: dict[int, tuple[str, bool]] = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" not in report.nodeid:
                continue
            match = CRITERION.search(report.nodeid)
            if not match:
                continue
            num = int(match.group(1))
            label = match.group(2).replace("_", " ")
            previous = verdicts.get(num, (label, True))[1]
            verdicts[num] = (label, previous and outcome == "passed")
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(verdicts):
        label, ok = verdicts[num]
        terminalreporter.write_line(f"criterion {num:2d} ({label}): {'PASS' if ok else 'FAIL'}")
