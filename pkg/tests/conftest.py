import pytest

from surfclass.oracle import canonical_sphere, canonical_torus, genus_g, genus_g_with_neck


@pytest.fixture
def torus():
    return canonical_torus()


@pytest.fixture
def sphere():
    return canonical_sphere()


@pytest.fixture(scope="session")
def genus2():
    return genus_g(2)


@pytest.fixture(scope="session")
def genus2_neck():
    return genus_g_with_neck(2)
