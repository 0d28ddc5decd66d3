import pytest

from sparsecharsum.ff import make_field


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 1, 4)


@pytest.fixture(scope="session")
def f256():
    return make_field(2, 1, 8)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 1, 2)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2, 1)


@pytest.fixture(scope="session")
def f512():
    # q = 8 ground field, cubic extension
    return make_field(2, 3, 3)


@pytest.fixture(scope="session")
def f27():
    return make_field(3, 1, 3)
