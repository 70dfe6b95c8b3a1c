import pytest

from diskcomplex import chain_surface


@pytest.fixture(scope="session")
def chain2():
    return chain_surface(2)


@pytest.fixture(scope="session")
def chain3():
    return chain_surface(3)
