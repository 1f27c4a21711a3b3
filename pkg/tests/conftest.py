import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from latzd.claims import figure1
from latzd.lattice import LatticeSpec, build_lattice


@pytest.fixture(scope="session")
def fig1():
    return figure1()


def chain(n: int):
    labels = tuple(str(i) for i in range(n))
    covers = tuple((str(i), str(i + 1)) for i in range(n - 1))
    return build_lattice(LatticeSpec(labels, covers))


@pytest.fixture(scope="session")
def census6():
    from latzd.census import enumerate_lattices

    return list(enumerate_lattices(6))


@pytest.fixture(scope="session")
def census7():
    from latzd.census import enumerate_lattices

    return list(enumerate_lattices(7))
