import pytest

from hornlearn.generate import example_corpus


@pytest.fixture(scope="session")
def gd_example():
    return example_corpus()["gd-example"]


@pytest.fixture(scope="session")
def bullet_example():
    return example_corpus()["bullet-example"]
