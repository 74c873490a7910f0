import pytest

from cck.harness import annulus_fixture, octagon_fixture


@pytest.fixture(scope="session")
def octagon():
    return octagon_fixture()


@pytest.fixture(scope="session")
def annulus():
    return annulus_fixture()
