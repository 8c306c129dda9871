import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mortonlab.cli import load_knot_table
from mortonlab.homfly import HomflyEngine

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# Knot Atlas PD of 3_1 (left-handed: writhe -3 under our sign rule)
TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE8_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


@pytest.fixture(scope="session")
def small_knots():
    """All knots with at most 7 crossings (see scripts/gen_small_knot_table.py)."""
    return load_knot_table(os.path.join(DATA_DIR, "small_knots.csv"))


@pytest.fixture(scope="session")
def session_engine():
    """Shared warm engine for expensive read-only computations."""
    return HomflyEngine()


@pytest.fixture()
def engine():
    return HomflyEngine()
