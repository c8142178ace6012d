import pytest

from ltlc.oracle import enumerate_lasso_frames
from ltlc.parser import parse_ltl


@pytest.fixture(scope="session")
def frames3():
    return list(enumerate_lasso_frames(3))


@pytest.fixture(scope="session")
def frames4():
    return list(enumerate_lasso_frames(4))


@pytest.fixture
def L():
    return parse_ltl
