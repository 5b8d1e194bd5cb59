"""
Shared fixtures for the golay-zcz test suite
"""
import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT / "src"))

from golay_zcz.golay import example1_pair, example2_pair, golay_mate  # noqa: E402
from golay_zcz.seeds import seed_registry  # noqa: E402
from golay_zcz.seqcore import PhaseSequence  # noqa: E402

FIXTURES = ROOT / "fixtures"

# Printed periodic profiles of the (2,40,10) pair built with signs (1,1,1,-1)
EXAMPLE1_PACF_P = [40] + [0] * 10 + [-4, -8, 4, 8, -4, 0, 4, 0, 12, 0, 12, 0, 4, 0, -4, 8, 4, -8, -4] + [0] * 10
EXAMPLE1_PACF_Q = [40] + [0] * 10 + [4, 8, -4, -8, 4, 0, -4, 0, -12, 0, -12, 0, -4, 0, 4, -8, -4, 8, 4] + [0] * 10
EXAMPLE1_PCCF = [0] * 11 + [-4, -8, 4, 16, 4, 0, 4, -8, -4, 0, 4, -8, 12, 0, 12, 0, -4, 8, 4] + [0] * 10


def random_sequence(rng: np.random.Generator, length: int, modulus: int) -> PhaseSequence:
    return PhaseSequence(modulus, tuple(int(e) for e in rng.integers(0, modulus, size=length)))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20211)


@pytest.fixture
def pair1():
    return example1_pair()


@pytest.fixture
def mate1(pair1):
    return golay_mate(pair1)


@pytest.fixture
def pair2():
    return example2_pair()


@pytest.fixture
def code4():
    return seed_registry("example3-N4")
