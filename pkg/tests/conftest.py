import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")

# one aggregated PASS/FAIL line per acceptance criterion, printed after the run
_criteria: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        num = int(m.group(1))
        _criteria[num] = _criteria.get(num, True) and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if _criteria[num] else 'FAIL'}"
        )
