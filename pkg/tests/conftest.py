import pytest

from ubaforge.oracle import LassoBatch, lasso_universe

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def words_ab():
    return lasso_universe(["a", "b"])


@pytest.fixture(scope="session")
def batch_ab(words_ab):
    return LassoBatch(words_ab)


@pytest.fixture(scope="session")
def words_a():
    return lasso_universe(["a"])


@pytest.fixture(scope="session")
def batch_a(words_a):
    return LassoBatch(words_a)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
