import pytest

from semihyper.construct import kq5, kq6, m3_lattice_example, top2, zero1


def fz(*xs):
    return frozenset(xs)


@pytest.fixture(scope="session")
def TOP2():
    return top2()


@pytest.fixture(scope="session")
def KQ5():
    return kq5()


@pytest.fixture(scope="session")
def KQ6():
    return kq6()


@pytest.fixture(scope="session")
def ZERO1():
    return zero1()


@pytest.fixture(scope="session")
def M3EX():
    return m3_lattice_example()


# index aliases used throughout: TOP2 e0,e1,e2 = 0,1,2; KQ5 O,A,B = 0,1,2;
# KQ6 O,U,V,W = 0,1,2,3
