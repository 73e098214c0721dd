import pytest

from grasscodes.gf import GF


@pytest.fixture(scope="session")
def f2():
    return GF(2)


@pytest.fixture(scope="session")
def f3():
    return GF(3)


@pytest.fixture(scope="session")
def f4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def f5():
    return GF(5)
