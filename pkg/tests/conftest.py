import pytest
from hypothesis import settings

from classes.EvolutionEquation import U, EvolutionEquation

settings.register_profile("jetlaw", max_examples=100, deadline=None)
settings.load_profile("jetlaw")


@pytest.fixture(scope="session")
def quadratic_equation() -> EvolutionEquation:
    return EvolutionEquation.make_gir("a", U**2, label="f = u^2")


@pytest.fixture(scope="session")
def generic_equation() -> EvolutionEquation:
    return EvolutionEquation.make_gir("a", "f")
