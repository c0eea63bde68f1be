import sys

import pytest

from rankfun.gallery import build_And2_cluster, build_d3_custom, build_OA_cluster


@pytest.fixture(scope="session")
def and2_d3():
    return build_And2_cluster(3, 3)


@pytest.fixture(scope="session")
def d3_custom():
    return build_d3_custom()


@pytest.fixture(scope="session")
def oa_d3():
    return build_OA_cluster(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
