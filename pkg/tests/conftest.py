import pytest

from cmtheta.harness import HarnessEnv, SuiteConfig


@pytest.fixture(scope="session")
def env():
    return HarnessEnv(SuiteConfig())


@pytest.fixture(scope="session")
def ctx(env):
    return env.ctx


@pytest.fixture(scope="session")
def settings(env):
    return env.settings
