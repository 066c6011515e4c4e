import pytest

from quandlelab.fields import build_field


@pytest.fixture(scope="session")
def F4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def F5():
    return build_field(5)


@pytest.fixture(scope="session")
def F7():
    return build_field(7)


@pytest.fixture(scope="session")
def F125():
    return build_field(5, 3)
