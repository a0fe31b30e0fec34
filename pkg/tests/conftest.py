import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

import acceptance_log  # noqa: E402

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def pytest_collection_modifyitems(session, config, items):
    # acceptance runs last so criterion 8 can read the property-suite results
    items.sort(key=lambda item: item.module.__name__ == "test_acceptance")
    for item in items:
        if item.name in acceptance_log.SUITE_NAMES:
            acceptance_log.instrument(item.obj, item.name)


def pytest_runtest_logreport(report):
    acceptance_log.SESSION["duration"] += report.duration
    name = report.nodeid.rpartition("::")[2]
    if name in acceptance_log.SUITE_NAMES:
        ok = acceptance_log.OUTCOMES.get(name, True) and not report.failed
        acceptance_log.OUTCOMES[name] = ok
        acceptance_log.ELAPSED[name] = acceptance_log.ELAPSED.get(name, 0.0) + report.duration


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
