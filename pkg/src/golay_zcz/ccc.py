"""
Complete complementary codes: verification, row/set transpose, Kronecker
composition, the GCP bridge and the composable-length enumerator
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Iterable, List, Tuple

from .config import get_settings
from .correlation import CorrelationProfile, cross_sum
from .errors import GolayZczError, MateError, SetSizeMismatchError, ShapeError
from .golay import GolayPair, mate_property
from .logger import setup_logger
from .seqcore import CompleteComplementaryCode, concat, kronecker

logger = setup_logger(__name__)

# Lengths with a known binary (4,4,N) seed
BASE_LENGTHS = (3, 4, 5, 7, 11, 13)

# Composable lengths as printed alongside the seed table, kept for comparison
REMARK_LENGTHS = (
    12, 13, 20, 24, 28, 36, 40, 44, 48, 52, 56, 60, 72, 80, 84, 88, 96,
    112, 120, 132, 140, 144, 156, 160, 168, 176, 192, 196, 200,
)


def _require_square(code: CompleteComplementaryCode) -> None:
    if not code.is_square:
        raise ShapeError(
            f"Code has {code.set_size} sets of {code.rows_per_set} rows; expected a square code"
        )


def _pair_ok(code: CompleteComplementaryCode, k1: int, k2: int) -> bool:
    profile: CorrelationProfile = cross_sum(code.sets[k1], code.sets[k2])
    if k1 == k2:
        return all(profile.is_zero_at(tau) for tau in profile.shifts if tau != 0)
    return all(profile.is_zero_at(tau) for tau in profile.shifts)


def verify_ccc(code: CompleteComplementaryCode) -> bool:
    """
    True iff every set is complementary and every pair of distinct sets has
    an identically zero cross-sum.
    """
    _require_square(code)
    pairs: List[Tuple[int, int]] = list(product(range(code.set_size), repeat=2))

    threads = get_settings().threads
    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(lambda kk: _pair_ok(code, *kk), pairs))
    else:
        results = [_pair_ok(code, k1, k2) for k1, k2 in pairs]

    for (k1, k2), ok in zip(pairs, results):
        if not ok:
            logger.debug(f"Cross-sum of sets {k1} and {k2} is not zero")
            return False
    return True


def transpose_ccc(code: CompleteComplementaryCode) -> CompleteComplementaryCode:
    """Set i of the output is (c^0_i, c^1_i, ..., c^{M-1}_i)."""
    _require_square(code)
    m = code.set_size
    return CompleteComplementaryCode.from_rows(
        [[code.row(k, i) for k in range(m)] for i in range(m)]
    )


def kronecker_ccc(first: CompleteComplementaryCode,
                  second: CompleteComplementaryCode) -> CompleteComplementaryCode:
    """
    Compose an (M,M,N1) and an (M,M,N2) code into an (M,M,M*N1*N2) code.

    Row l of set m is kron(c^m_0, d^l_0) || ... || kron(c^m_{M-1}, d^l_{M-1}).
    """
    if first.set_size != second.set_size:
        raise SetSizeMismatchError(
            f"Codes have different set sizes: {first.set_size} vs {second.set_size}"
        )
    _require_square(first)
    _require_square(second)

    m = first.set_size
    sets = []
    for s in range(m):
        rows = []
        for r in range(m):
            rows.append(concat([kronecker(first.row(s, j), second.row(r, j)) for j in range(m)]))
        sets.append(rows)
    code = CompleteComplementaryCode.from_rows(sets)
    logger.debug(f"Composed ({m},{m},{first.length}) and ({m},{m},{second.length}) into {code.shape}")
    return code


def gcp_to_ccc(pair: GolayPair, mate: GolayPair) -> CompleteComplementaryCode:
    """A GCP and its mate form the (2,2,N) code {[a; b], [c; d]}."""
    if not mate_property(pair, mate):
        raise MateError("second pair is not a complementary mate of the first")
    return CompleteComplementaryCode.from_rows([[pair.a, pair.b], [mate.a, mate.b]])


def reachable_lengths(bound: int, base: Iterable[int] = BASE_LENGTHS) -> List[int]:
    """
    Every N <= bound reachable from the base lengths by N = 4 * N1 * N2,
    closed transitively.
    """
    if bound < 1:
        raise GolayZczError(f"Bound must be positive, got {bound}")
    reached = {n for n in base if n <= bound}
    frontier = True
    while frontier:
        frontier = False
        for n1, n2 in product(sorted(reached), repeat=2):
            n = 4 * n1 * n2
            if n <= bound and n not in reached:
                reached.add(n)
                frontier = True
    return sorted(reached)


def compare_with_remark(bound: int) -> Tuple[List[int], List[int], List[int]]:
    """(common, only reachable here, only in the printed list) up to bound."""
    ours = set(reachable_lengths(bound))
    printed = {n for n in REMARK_LENGTHS if n <= bound}
    return sorted(ours & printed), sorted(ours - printed), sorted(printed - ours)
