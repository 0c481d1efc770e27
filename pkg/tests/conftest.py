import pytest

from ybsys.scalar import variable


@pytest.fixture(scope="session")
def sym():
    """The five scalar variables, as a simple namespace."""

    class Vars:
        p = variable("p")
        q = variable("q")
        r = variable("r")
        s = variable("s")
        t = variable("t")

    return Vars
