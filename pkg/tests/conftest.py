import pytest

from truncvar import make_path


@pytest.fixture
def p1():
    return make_path([0, 1, 2, 3, 4], [0.0, 1.0, 0.2, 1.2, 0.2])


@pytest.fixture
def p3():
    return make_path([0, 1], [5.0, 5.0])


@pytest.fixture
def ramp3():
    return make_path([0, 1, 2], [0.0, 1.0, 2.0])
