import pytest

from aisemiring import catalog
from aisemiring.census import enumerate_ai_semirings


@pytest.fixture(scope="session")
def cat():
    return {name: catalog.get(name) for name in catalog.names()}


@pytest.fixture(scope="session")
def order4_census():
    return enumerate_ai_semirings(4)


@pytest.fixture(scope="session")
def order3_census():
    return enumerate_ai_semirings(3)
