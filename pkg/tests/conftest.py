"""Shared fixtures for the Conflict Lattice test suite."""

import pytest
from hypothesis import HealthCheck, settings

from app import create_app
from config import TestingConfig
from measures.formats import emit_scenario
from measures.scenarios import paper_example

settings.register_profile(
    'conflict',
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('conflict')


@pytest.fixture
def app():
    return create_app(TestingConfig)


@pytest.fixture
def runner(app):
    return app.test_cli_runner(mix_stderr=False)


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def example1():
    return paper_example(1)


@pytest.fixture
def example2():
    return paper_example(2)


@pytest.fixture
def example3():
    return paper_example(3)


@pytest.fixture
def scenario_path(tmp_path):
    """Write built-in example ``k`` as a scenario file and return its path."""

    def write(k):
        path = tmp_path / f'example{k}.json'
        path.write_text(emit_scenario(paper_example(k), f'example{k}'))
        return path

    return write
