from collections import defaultdict

import hypothesis
import pytest

from fuzzmine import (
    EXAMPLE_TAXONOMY,
    EXAMPLE_TRANSACTIONS,
    ArithmeticMode,
    DescentPolicy,
    MiningConfig,
    qualify,
    read_taxonomy,
    read_transactions,
)

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile("default")

EXAMPLE_BETAS = {1: "0.36", 2: "0.3", 3: "0.2", 4: "0.16"}


@pytest.fixture(scope="session")
def taxonomy():
    return read_taxonomy(EXAMPLE_TAXONOMY)


@pytest.fixture(scope="session")
def transactions(taxonomy):
    return read_transactions(EXAMPLE_TRANSACTIONS, taxonomy)


@pytest.fixture(scope="session")
def example_m(transactions, taxonomy):
    return qualify(transactions, 6, taxonomy)


@pytest.fixture(scope="session")
def compat_config():
    return MiningConfig(
        EXAMPLE_BETAS,
        chi=6,
        mode=ArithmeticMode.COMPAT,
        descent=DescentPolicy.FREQUENT_DESCENDANTS,
    )


# one PASS/FAIL line per acceptance criterion in the terminal summary
_criteria: dict[int, dict] = defaultdict(lambda: {"title": "", "passed": 0, "failed": 0})


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    entry = _criteria[number]
    entry["title"] = title
    if call.excinfo is None:
        entry["passed"] += 1
    else:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["failed"] == 0 else "FAIL"
        total = e["passed"] + e["failed"]
        terminalreporter.write_line(
            f"criterion {number}: {status}  {e['title']}  ({e['passed']}/{total} checks)"
        )
