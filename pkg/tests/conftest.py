import pytest

from deliberated.fixtures import load_fixture


@pytest.fixture(scope="session")
def weather():
    return load_fixture("weather")


@pytest.fixture(scope="session")
def variant():
    return load_fixture("variant")


@pytest.fixture(scope="session")
def budget():
    return load_fixture("budget")


@pytest.fixture(scope="session")
def flicker():
    return load_fixture("flicker")


@pytest.fixture(scope="session")
def empty():
    return load_fixture("empty")
