import os
import sys

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ZINBIEL_SLOW"):
        return
    skip = pytest.mark.skip(reason="optional long run; set ZINBIEL_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    reports = terminalreporter.stats.get("passed", []) + terminalreporter.stats.get("failed", [])
    if module is None or not any("test_acceptance" in r.nodeid for r in reports):
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, 10):
        terminalreporter.write_line(module.RESULTS.get(number, f"criterion {number}: FAIL - not run or errored"))
