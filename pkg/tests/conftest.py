from pathlib import Path

import pytest

from paritybq import CocyclePair, biquandle_from_matrix, parity_biquandle_from_matrix

DATA = Path(__file__).resolve().parents[1] / "src" / "paritybq" / "data"

BIQUANDLE3 = [
    [1, 3, 2, 1, 1, 1],
    [3, 2, 1, 2, 2, 2],
    [2, 1, 3, 3, 3, 3],
]

PARITY3 = [
    [3, 1, 3, 3, 1, 3],
    [2, 2, 2, 2, 2, 2],
    [1, 3, 1, 1, 3, 1],
    [1, 3, 1, 3, 3, 3],
    [2, 2, 2, 2, 2, 2],
    [3, 1, 3, 1, 1, 1],
]

COCYCLE3_Z5 = [
    [0, 0, 0, 0, 2, 0],
    [2, 0, 2, 2, 3, 2],
    [0, 0, 0, 0, 2, 0],
]

PARITY4 = [
    [3, 4, 2, 1, 3, 4, 2, 1],
    [1, 2, 4, 3, 1, 2, 4, 3],
    [4, 3, 1, 2, 4, 3, 1, 2],
    [2, 1, 3, 4, 2, 1, 3, 4],
    [1, 3, 1, 3, 1, 3, 1, 3],
    [2, 4, 2, 4, 2, 4, 2, 4],
    [3, 1, 3, 1, 3, 1, 3, 1],
    [4, 2, 4, 2, 4, 2, 4, 2],
]

COCYCLE4_Z3 = [
    [0, 2, 2, 1, 1, 1, 1, 1],
    [2, 0, 1, 2, 1, 1, 1, 1],
    [2, 1, 0, 2, 1, 1, 1, 1],
    [1, 2, 2, 0, 1, 1, 1, 1],
]

TREFOIL_21 = "O1+O2+U1+U2+"
CLASSICAL_TREFOIL = "O1+U2+O3+U1+O2+U3+"


@pytest.fixture(scope="session")
def bq3():
    return biquandle_from_matrix(BIQUANDLE3)


@pytest.fixture(scope="session")
def x3():
    return parity_biquandle_from_matrix(PARITY3)


@pytest.fixture(scope="session")
def x4():
    return parity_biquandle_from_matrix(PARITY4)


@pytest.fixture(scope="session")
def phi3():
    return CocyclePair.from_matrix(COCYCLE3_Z5, 5)


@pytest.fixture(scope="session")
def phi4():
    return CocyclePair.from_matrix(COCYCLE4_Z3, 3)


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria.setdefault(marker.args[0], []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({sum(results)}/{len(results)} checks)"
        )
