import pytest

from rainbowkit import MatchingFamily, edge, make_path, validate_matching


@pytest.fixture
def even3():
    return validate_matching([edge(0, 0), edge(1, 1), edge(2, 2)])


@pytest.fixture
def odd3():
    return validate_matching([edge(1, 0), edge(2, 1), edge(0, 2)])


@pytest.fixture
def even2():
    return validate_matching([edge(0, 0), edge(1, 1)])


@pytest.fixture
def odd2():
    return validate_matching([edge(1, 0), edge(0, 1)])


@pytest.fixture
def c6_family(even3, odd3):
    return MatchingFamily((even3, even3, odd3, odd3))


def path(*nodes):
    return make_path(nodes)
