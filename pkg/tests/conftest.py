import cmath
import json
import math
import pathlib
import sys

import numpy as np
import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from phasedmatroids import ComplexMatrix, Phase, Phirotope, from_matrix

FIXTURES = pathlib.Path(__file__).parent.parent / "fixtures"

#: One line per acceptance criterion, echoed in the terminal summary so the
#: pass/fail report survives output capture.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def load_fixture(name):
    with open(FIXTURES / name) as fh:
        return json.load(fh)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def runex_matrix():
    """Rank-3 matrix on 5 elements with one vanishing maximal minor."""
    return ComplexMatrix.from_complex(np.array([
        [1, 0, 0, 0.5 * cmath.exp(1j * math.pi / 4), (1 / 3) * cmath.exp(1j * math.pi / 2)],
        [0, 1, 0, 1, (4 / 3) * cmath.exp(1j * math.pi / 4)],
        [0, 0, 1, 0, -1],
    ], dtype=complex))


@pytest.fixture
def runex_phi(runex_matrix):
    return from_matrix(runex_matrix)


NONREAL2EX_VALUES = {
    (1, 2): 0.0, (1, 3): 0.0, (1, 4): 0.0, (1, 5): 0.0,
    (2, 3): 1.0, (2, 4): 1.5, (2, 5): 4 / 3,
    (3, 4): 1.75, (3, 5): 5 / 3, (4, 5): 5 / 6,
}


@pytest.fixture
def nonreal2ex_phi():
    """The canonical rank-2 phirotope on 5 elements that is not realizable."""
    return Phirotope(5, 2, {b: Phase.from_angle_over_pi(x)
                            for b, x in NONREAL2EX_VALUES.items()})
