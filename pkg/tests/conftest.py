import pytest
from hypothesis import HealthCheck, settings

from liefusion import cache

settings.register_profile(
    "exact", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


@pytest.fixture(autouse=True)
def _no_disk_cache():
    """Tests never touch the user's cache unless they install one."""
    cache.install(None)
    yield
    cache.install(None)


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_criteria):
        n = int(nodeid.split("test_criterion_")[1][:2])
        status = "PASS" if _criteria[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({nodeid.split('::')[1]})")
