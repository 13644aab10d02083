import pytest

from plengths import NumericalSemigroup

TEST_GENERATORS = [(2, 3), (3, 5, 7), (6, 9, 20)]


@pytest.fixture(scope="session")
def semigroups():
    return {gens: NumericalSemigroup(gens) for gens in TEST_GENERATORS}
