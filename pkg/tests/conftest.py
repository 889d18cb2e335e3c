import pytest

from micronuc import graph_of
from micronuc.word import canonical_words


@pytest.fixture(scope="session")
def g1212():
    return graph_of("1212")


@pytest.fixture(scope="session")
def g1221():
    return graph_of("1221")


@pytest.fixture(scope="session")
def g11():
    return graph_of("11")


def words_up_to(n):
    return [w for k in range(n + 1) for w in canonical_words(k)]
