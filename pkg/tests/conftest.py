import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simplicial import MonomialIdeal, SimplicialComplex  # noqa: E402

Y = ("y0", "y1", "y2", "y3")


@pytest.fixture
def bowtie():
    return SimplicialComplex.from_faces(["vwx", "xyz"], vertices="vwxyz")


@pytest.fixture
def gamma():
    return SimplicialComplex.from_faces([["x0", "x1", "x2"], ["x2", "x3"]])


@pytest.fixture
def j_ideal():
    return MonomialIdeal.from_strings(Y, ["y0*y1", "y0*y2", "y0*y3", "y1*y2*y3"])


@pytest.fixture
def j_prime():
    # generator order as printed for mingens J'
    return MonomialIdeal.from_strings(Y, ["y1*y3", "y2^2", "y0*y2", "y1^2", "y0^2"])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
