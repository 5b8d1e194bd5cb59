"""
Registry of binary (4,4,N) seed codes.

The table entries are stored as strings of (-1)-exponents, one string per
row and four rows per set; the N=4 code is stored as its literal +1/-1
matrices. Every code is verified the first time it is loaded.
"""

from functools import lru_cache
from typing import Dict, List, Sequence

from .ccc import verify_ccc
from .errors import SeedDataError, UnknownSeedError
from .logger import setup_logger
from .seqcore import CompleteComplementaryCode, PhaseSequence

logger = setup_logger(__name__)

_TABLE_EXPONENTS: Dict[str, List[List[str]]] = {
    "table3-N3": [
        ["000", "001", "001", "010"],
        ["010", "001", "110", "111"],
        ["011", "000", "101", "100"],
        ["011", "010", "000", "011"],
    ],
    "table3-N5": [
        ["00001", "01100", "01000", "01011"],
        ["00010", "00101", "01111", "00110"],
        ["00101", "11101", "00110", "10000"],
        ["01100", "11110", "01011", "10111"],
    ],
    "table3-N7": [
        ["0000001", "0011010", "0011010", "0100011"],
        ["0011101", "0011010", "1100101", "1000000"],
        ["0101100", "0100011", "1111110", "1010011"],
        ["0101100", "0111111", "0011101", "0101100"],
    ],
    "table3-N11": [
        ["01110110110", "00111000101", "00011010100", "00000001101"],
        ["00011010100", "00000001101", "10001001001", "11000111010"],
        ["10110000000", "11010100111", "10100011100", "10010010001"],
        ["01011100011", "01101101110", "10110000000", "11010100111"],
    ],
    "table3-N13": [
        ["0111011010100", "0011101001101", "0001100001001", "0000000111010"],
        ["0001100001001", "0000000111010", "1000100101011", "1100010110010"],
        ["0101110000000", "0110111100111", "1011001011100", "1101010010001"],
        ["0100110100011", "0010101101110", "0101110000000", "0110111100111"],
    ],
}

_EXAMPLE_MATRICES: Dict[str, List[List[List[int]]]] = {
    "example3-N4": [
        [[1, 1, 1, 1], [1, 1, -1, -1], [-1, 1, -1, 1], [-1, 1, 1, -1]],
        [[-1, -1, 1, 1], [-1, -1, -1, -1], [1, -1, -1, 1], [1, -1, 1, -1]],
        [[-1, 1, -1, 1], [-1, 1, 1, -1], [1, 1, 1, 1], [1, 1, -1, -1]],
        [[1, -1, -1, 1], [1, -1, 1, -1], [-1, -1, 1, 1], [-1, -1, -1, -1]],
    ],
}

SEED_NAMES = tuple(sorted(_TABLE_EXPONENTS, key=lambda n: int(n.split("N")[1]))) + tuple(_EXAMPLE_MATRICES)


def list_seeds() -> List[str]:
    return list(SEED_NAMES)


def _from_exponents(sets: Sequence[Sequence[str]]) -> CompleteComplementaryCode:
    return CompleteComplementaryCode.from_rows(
        [[PhaseSequence.from_bits(bits) for bits in rows] for rows in sets]
    )


def _from_matrices(sets: Sequence[Sequence[Sequence[int]]]) -> CompleteComplementaryCode:
    return CompleteComplementaryCode.from_rows(
        [[PhaseSequence.from_values(row, 2) for row in rows] for rows in sets]
    )


@lru_cache(maxsize=None)
def seed_registry(name: str) -> CompleteComplementaryCode:
    """
    Look up a seed code by identifier.

    Raises:
        UnknownSeedError: name is not in the registry
        SeedDataError: the stored code fails CCC verification
    """
    if name in _TABLE_EXPONENTS:
        code = _from_exponents(_TABLE_EXPONENTS[name])
    elif name in _EXAMPLE_MATRICES:
        code = _from_matrices(_EXAMPLE_MATRICES[name])
    else:
        raise UnknownSeedError(
            f"unknown seed {name!r}; available: {', '.join(SEED_NAMES)}"
        )

    if not verify_ccc(code):
        raise SeedDataError(f"seed {name} does not verify as a CCC")
    logger.debug(f"Loaded seed {name} with shape {code.shape}")
    return code
