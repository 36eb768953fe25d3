import pytest

from charp import parse_ring


@pytest.fixture
def R2xy():
    return parse_ring("F_2[x,y]")


@pytest.fixture
def R2xyz():
    return parse_ring("F_2[x,y,z]")


@pytest.fixture
def R3xy():
    return parse_ring("F_3[x,y]")


@pytest.fixture
def cusp2():
    """The non-F-pure hypersurface quotient at p = 2."""
    return parse_ring("F_2[x,y,z]/(x^2 + y*z^2)")


@pytest.fixture
def cusp3():
    """The non-F-pure hypersurface quotient at p = 3."""
    return parse_ring("F_3[x,y,z]/(x^3 - y*z^3)")
