import pytest

from infodist import build_table, strings_up_to


@pytest.fixture(scope="session")
def table2():
    return build_table(strings_up_to(2), 12)


@pytest.fixture(scope="session")
def table3():
    return build_table(strings_up_to(3), 14)


@pytest.fixture(scope="session")
def table4():
    return build_table(strings_up_to(4), 14)


@pytest.fixture(scope="session")
def table5():
    return build_table(strings_up_to(5), 14)


@pytest.fixture(scope="session")
def table6():
    return build_table(strings_up_to(6), 15)
