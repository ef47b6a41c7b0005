import pytest
from hypothesis import strategies as st

from pfinz.finset import make
from pfinz.oracle import enumerate_corpus


def finsets(lo=-40, hi=40, max_size=8):
    return st.lists(st.integers(lo, hi), min_size=1, max_size=max_size).map(make)


@pytest.fixture(scope="session")
def small_corpus():
    return enumerate_corpus(-3, 3, 3)


@pytest.fixture(scope="session")
def wide_corpus():
    return enumerate_corpus(-4, 4, 4)


@pytest.fixture
def S():
    def build(*values):
        return make(values)

    return build


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
