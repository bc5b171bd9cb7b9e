"""Shared pytest configuration: the acceptance summary block.

The acceptance gate lives in tests/test_acceptance.py as test functions named
``test_criterion_<k>_*``.  After a run that exercised any of them, one
PASS/FAIL line per criterion is appended to the terminal summary; a criterion
backed by several test functions passes only when all of them do.
"""

import re

CRITERIA = {
    1: "golden canonical-basis table, p=3 n=5, exact, under one second",
    2: "golden seminormal norms with 1x1 Grams of mod-3 rank zero",
    3: "conjecture verification, p=3 all n<=10 and p=5 all n<=12",
    4: "decomposition-matrix consistency, p=3 n<=8",
    5: "property suites (Coxeter, form invariance, intertwining, "
       "weight-space counts, p-integrality, bar-invariance, ladder lemma, "
       "word invariance)",
    6: "nonnegativity of transition entries at q=1, p=3 n<=10",
}

_PATTERN = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            match = _PATTERN.search(getattr(report, "nodeid", ""))
            if match is None:
                continue
            k = int(match.group(1))
            verdicts[k] = verdicts.get(k, True) and outcome == "passed"
    if not verdicts:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(verdicts):
        verdict = "PASS" if verdicts[k] else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {k}: {verdict} - {CRITERIA.get(k, '')}")
