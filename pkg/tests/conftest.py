# tests/conftest.py
import pytest

from sympow import fixtures
from sympow.polyring import parse_ring


@pytest.fixture
def xy():
    return parse_ring("QQ[x,y]")


@pytest.fixture
def xyz():
    return parse_ring("QQ[x,y,z]")


@pytest.fixture
def xyzw():
    return parse_ring("QQ[x,y,z,w]")


@pytest.fixture
def three_edges():
    return fixtures.three_edges()


@pytest.fixture
def tetrahedron():
    return fixtures.tetrahedron()


@pytest.fixture
def hankel():
    return fixtures.hankel()
