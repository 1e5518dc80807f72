import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::test_criterion_", 1)[1]
        _criteria[name] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_", 1)[0])):
        number, label = name.split("_", 1)
        verdict = "PASS" if _criteria[name] else "FAIL"
        terminalreporter.write_line(f"criterion {number} ({label.replace('_', ' ')}): {verdict}")
