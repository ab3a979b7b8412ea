import pytest

from cylpuzzle.graphs import cayley_g, cayley_s5, state_graph
from cylpuzzle.quotient import quotient_k0, quotient_k1


@pytest.fixture(scope="session")
def X():
    return cayley_g()


@pytest.fixture(scope="session")
def S5():
    return cayley_s5()


@pytest.fixture(scope="session")
def state():
    return state_graph()


@pytest.fixture(scope="session")
def q0():
    return quotient_k0()


@pytest.fixture(scope="session")
def q1():
    return quotient_k1()
