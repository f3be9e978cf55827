import pytest

from springer_zmodel.verify import model


@pytest.fixture(scope="session")
def a1():
    return model("A", 1, ())


@pytest.fixture(scope="session")
def a2():
    return model("A", 2, ())


@pytest.fixture(scope="session")
def c3_levi():
    return model("C", 3, (1, 2))
