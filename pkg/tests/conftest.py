import pytest

from hyperclust.checks import CorpusBounds, generate_corpus


@pytest.fixture(scope="session")
def corpus():
    """The default exhaustive corpus; built once per test session."""
    return generate_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """A much smaller corpus for checks that are quadratic in corpus size."""
    return generate_corpus(CorpusBounds(3, 3, 3, 3, 4))
