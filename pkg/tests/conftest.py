import pytest

from pogcut.pog import build_triad


@pytest.fixture(scope="session")
def triad6():
    return build_triad(6)


@pytest.fixture(scope="session")
def triad8():
    return build_triad(8)
