import pytest

from tnnflag.cartan import cartan_of_type
from tnnflag.weyl import WeylGroup, type_a_group


@pytest.fixture(scope="session")
def A1():
    return WeylGroup(cartan_of_type("A", 1))


@pytest.fixture(scope="session")
def A2():
    return WeylGroup(cartan_of_type("A", 2))


@pytest.fixture(scope="session")
def B2():
    return WeylGroup(cartan_of_type("B", 2))


@pytest.fixture(scope="session")
def S3():
    return type_a_group(3)


@pytest.fixture(scope="session")
def S4():
    return type_a_group(4)
