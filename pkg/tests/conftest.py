import pytest

from bsnet.config import Settings
from bsnet.graph import build, parse
from bsnet.services import TPathService, WebService


def labels(*texts: str):
    return [parse(t) for t in texts]


@pytest.fixture(scope="session")
def settings() -> Settings:
    return Settings()


@pytest.fixture(scope="session")
def bs3():
    return build(3)


@pytest.fixture(scope="session")
def bs4():
    return build(4)


@pytest.fixture(scope="session")
def bs5():
    return build(5)


@pytest.fixture(scope="session")
def bs6():
    return build(6)


@pytest.fixture(scope="session")
def web_service(settings) -> WebService:
    return WebService(settings)


@pytest.fixture(scope="session")
def tpaths(settings, web_service) -> TPathService:
    return TPathService(settings, web_service)
