import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eventposet import standard_lattice
from eventposet.verify import projection_lattice


@pytest.fixture(scope="session")
def lattice8():
    return standard_lattice(8, 8)


@pytest.fixture(scope="session")
def lattice12():
    return standard_lattice(12, 12)


@pytest.fixture(scope="session")
def pi_lattice():
    return projection_lattice()
